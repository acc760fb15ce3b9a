#include "braidcoh/space.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "braidcoh/errors.hpp"

namespace braidcoh {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

int to_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError(0, "bad integer for " + std::string(what) + ": `" + std::string(s) + "`");
  return v;
}

}  // namespace

SpaceSpec SpaceSpec::compact_genus(int g) {
  if (g < 0) throw RangeError("genus must be nonnegative");
  if (g == 0) return sphere();
  SpaceSpec s = with(Kind::CompactGenus);
  s.genus = g;
  return s;
}

SpaceSpec SpaceSpec::hyperbolic(int k) {
  if (k < 0) throw RangeError("free rank must be nonnegative");
  SpaceSpec s = with(Kind::NoncompactHyperbolic);
  s.free_rank = k;
  return s;
}

SpaceSpec SpaceSpec::higher(int real_dim, AbelianProfile base, bool projective, int complex_dim, bool trivial_base) {
  if (real_dim < 3) throw RangeError("higher-dimensional spaces need real dimension >= 3");
  if (complex_dim != 0 && 2 * complex_dim != real_dim) throw RangeError("complex dimension must be half the real dimension");
  if (projective && complex_dim == 0) throw RangeError("a projective manifold needs a complex dimension");
  if (trivial_base && (base.free_rank != 0 || !base.torsion.empty())) throw RangeError("trivial base group with nonzero H_1");
  SpaceSpec s = with(Kind::HigherDim);
  s.real_dim = real_dim;
  s.base = std::move(base);
  s.projective = projective;
  s.complex_dim = complex_dim;
  s.trivial_base = trivial_base;
  return s;
}

std::optional<int> SpaceSpec::compact_genus_value() const {
  if (kind == Kind::Sphere) return 0;
  if (kind == Kind::CompactGenus) return genus;
  return std::nullopt;
}

SpaceSpec SpaceSpec::parse(std::string_view text) {
  auto parts = split(text, ':');
  const std::string_view head = parts[0];
  auto need = [&](std::size_t k) {
    if (parts.size() != k) throw ParseError(0, "malformed space `" + std::string(text) + "`");
  };
  if (head == "sphere") return need(1), sphere();
  if (head == "plane") return need(1), plane();
  if (head == "disk") return need(1), disk();
  if (head == "c-star" || head == "cstar") return need(1), c_star();
  if (head == "genus") return need(2), compact_genus(to_int(parts[1], "genus"));
  if (head == "hyperbolic") return need(2), hyperbolic(to_int(parts[1], "free rank"));
  if (head == "higher") {
    if (parts.size() < 2) throw ParseError(0, "higher needs a real dimension");
    const int d = to_int(parts[1], "real dimension");
    bool proj = false, triv = false;
    int cdim = 0;
    AbelianProfile base;
    for (std::size_t i = 2; i < parts.size(); ++i) {
      std::string_view opt = parts[i];
      if (opt == "projective") {
        proj = true;
      } else if (opt == "trivial") {
        triv = true;
      } else if (opt.substr(0, 8) == "complex=") {
        cdim = to_int(opt.substr(8), "complex dimension");
      } else if (opt.substr(0, 3) == "b1=") {
        base.free_rank = to_int(opt.substr(3), "b1");
      } else if (opt.substr(0, 8) == "torsion=") {
        for (auto t : split(opt.substr(8), ',')) {
          int v = to_int(t, "torsion");
          if (v < 2) throw ParseError(0, "torsion coefficients must be >= 2");
          base.torsion.emplace_back(v);
        }
      } else {
        throw ParseError(0, "unknown option `" + std::string(opt) + "` for higher");
      }
    }
    if (proj && cdim == 0) cdim = d / 2;
    return higher(d, std::move(base), proj, cdim, triv);
  }
  throw ParseError(0, "unknown space kind `" + std::string(head) + "`");
}

std::string SpaceSpec::str() const {
  switch (kind) {
    case Kind::Sphere: return "sphere";
    case Kind::Plane: return "plane";
    case Kind::Disk: return "disk";
    case Kind::CStar: return "c-star";
    case Kind::CompactGenus: return "genus:" + std::to_string(genus);
    case Kind::NoncompactHyperbolic: return "hyperbolic:" + std::to_string(free_rank);
    case Kind::HigherDim: {
      std::ostringstream os;
      os << "higher:" << real_dim;
      if (projective) os << ":projective";
      if (complex_dim != 0) os << ":complex=" << complex_dim;
      if (base.free_rank != 0) os << ":b1=" << base.free_rank;
      if (!base.torsion.empty()) {
        os << ":torsion=";
        for (std::size_t i = 0; i < base.torsion.size(); ++i) os << (i ? "," : "") << base.torsion[i];
      }
      if (trivial_base) os << ":trivial";
      return os.str();
    }
  }
  return "?";
}

}  // namespace braidcoh
