#include "braidcoh/anchors.hpp"

#include <stdexcept>

namespace braidcoh {

const std::vector<std::pair<std::string, std::string>>& anchor_table() {
  static const std::vector<std::pair<std::string, std::string>> table{
      {"fox.h1", "dim H^1(G, V) = dim ker J(rho) - (dim V - dim V^G)"},
      {"kunneth.h1", "H^1(G_1 x G_2, V_1 (x) V_2) = H^1(V_1) (x) H^0(V_2) + H^0(V_1) (x) H^1(V_2)"},
      {"surface.h1", "dim H^1(Pi_g, C_rho) = 2g - 2 for rho != 1"},
      {"surface.euler", "chi(Pi_g, V) = 2 dim V (1 - g)"},
      {"charvar.sl", "dim Hom(Pi_g, SL_r) = (r^2 - 1)(2g - 1), dim Char(Pi_g, SL_r) = 2(r^2 - 1)(g - 1)"},
      {"charvar.gl", "dim T Char(Pi_g^n, prod GL_{r_i}) = 2gn + sum 2(r_i^2 - 1)(g - 1)"},
      {"e2.page", "E_2^{10} = H^1(X^n), E_2^{01} = sum_{i<j} Z G_ij, E_2^{20} = H^2(X^n), d_2(G_ij) = [Delta_ij]"},
      {"e2.diagonal", "[Delta] = e_1 + e_2 + sum_k (a_k (x) b_k - b_k (x) a_k) in H^2(X^2)"},
      {"betti.genus", "H_1(P_n(X_g)) = H_1(Pi_g)^n, coker d_2 torsion free"},
      {"betti.sphere", "rank H_1(P_n(S^2)) = C(n,2) - n"},
      {"betti.cstar", "rank H_1(P_n(C^*)) = n + C(n,2), d_2 = 0"},
      {"twisted.genus", "H^1(P_n(X_g), C_rho) = H^1(Pi_g^n, C_rho) for g >= 2"},
      {"twisted.torus", "dim H^1(P_n(X_1), C_rho) = #{i < j : rho_i rho_j = 1} for rho != 1"},
      {"twisted.cstar", "dim H^1(P_n(C^*), C_rho) = #{i < j : rho_i rho_j = 1} on J_n^* Char(Z^n), rho != 1"},
      {"sigma1.genus", "Sigma^1(P_n(X_g)) = U_i pi_i^* Char(Pi_g), each of dim 2g (g >= 2)"},
      {"sigma1.torus", "Sigma^1(P_n(X_1)) = U_{i<j} T_ij, T_ij = {rho_i rho_j = 1} of dim 2n - 2"},
      {"sigma1.cstar", "Sigma^1(P_n(C^*)) n J_n^* Char(Z^n) = U_{i<j} T_ij of dim n - 1"},
      {"sigma1.generic", "dim H^1(P_n, C_rho) = 1 for general rho in T_ij"},
      {"sigma1.infinite", "|Sigma^1(P_n(X_1))| = infinity"},
      {"surj.genus", "P_n(X_g) ->> Pi_h => h <= g"},
      {"surj.torus", "P_n(X_1) ->> Pi_h => h < n - 1 (n >= 3); h > n and h = n are impossible for all n"},
      {"surj.cstar", "no P_n(C^*) ->> Pi_h (h >= 2) with T_ij in f^* Char(Pi_h)"},
      {"partC", "pi^*: H^{2m}(Pi_g^m) -> H^{2m}(P_n(X_g)) is 0 for 2 <= m <= n"},
      {"R1", "1 -> K -> G -> Q -> 1 with K finitely generated and e(Q) = infinity => G not Kahler"},
      {"R2", "[P_n(S^2) : H] < infinity with H of type R1 for n >= 4"},
      {"R3", "|P_n(S^2)|, |B_n(S^2)| < infinity for n = 2, 3; finite groups are projective"},
      {"R4", "f^*: H^1(Y) -> H^1(M) iso, f_12^*: H^4(Y_12) -> H^4(M) = 0 => dim f^* H^1 <= 2(n-1)g < 2ng"},
      {"R5", "Sigma^1(P_n(X_1)) has an untranslated torus of dim 2n - 2"},
      {"R6", "Sigma^1(P_n(C^*)) contains T_12 of dim n - 1, n >= 3"},
      {"R7", "b_1(M) is even for compact Kahler M"},
      {"R8", "[G : H] < infinity and G Kahler => H Kahler"},
      {"R9", "dim_R X >= 3: P_n(X) = pi_1(X)^n, B_n(X) = pi_1(X) wr S_n; H projective => H wr S_n projective"},
      {"R10", "p > 2: P_n(C), n >= 2, and P_n(S^2), n >= 4, have pro-(prime to p) completion outside P(p)"},
      {"R11", "open for P_n(X_g), g > 0: pro-(prime to p) completion in P(p)?"},
      {"beauville", "compact Kahler M: no untranslated torus in Sigma^1 of dim 2 or odd dim; dim 2g >= 4 => f^* Char(C), g(C) = g"},
  };
  return table;
}

const std::string& anchor(std::string_view key) {
  for (const auto& [k, v] : anchor_table())
    if (k == key) return v;
  throw std::out_of_range("unknown anchor `" + std::string(key) + "`");
}

std::string anchor_table_text() {
  std::string out;
  for (const auto& [k, v] : anchor_table()) out += k + "\t" + v + "\n";
  return out;
}

}  // namespace braidcoh
