#include "braidcoh/representation.hpp"

#include <numeric>

#include "json.hpp"

#include "braidcoh/errors.hpp"

namespace braidcoh {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace

Character::Character(std::uint32_t n, std::vector<std::int64_t> exponents,
                     std::optional<std::vector<mpq_class>> radial)
    : n_(n), exp_(std::move(exponents)), radial_(std::move(radial)) {
  if (n_ == 0) throw RangeError("character cyclotomy must be positive");
  for (auto& e : exp_) e = mod(e, n_);
  if (radial_) {
    if (radial_->size() != exp_.size()) throw Error("radial part has the wrong number of entries");
    bool all_one = true;
    for (auto& r : *radial_) {
      r.canonicalize();
      if (r <= 0) throw RangeError("radial values must be positive rationals");
      if (r != 1) all_one = false;
    }
    if (all_one) radial_.reset();
  }
}

Character Character::trivial(std::size_t generators) {
  return Character(1, std::vector<std::int64_t>(generators, 0));
}

bool Character::is_trivial() const {
  for (auto e : exp_)
    if (e != 0) return false;
  return !radial_;
}

Character Character::rescaled(std::uint32_t m) const {
  if (m % n_ != 0) throw ContextError("cannot rescale a character of order " + std::to_string(n_) +
                                      " to " + std::to_string(m));
  std::vector<std::int64_t> e = exp_;
  for (auto& x : e) x *= m / n_;
  return Character(m, std::move(e), radial_);
}

Character Character::inverse() const {
  std::vector<std::int64_t> e = exp_;
  for (auto& x : e) x = -x;
  std::optional<std::vector<mpq_class>> r;
  if (radial_) {
    r.emplace();
    for (const auto& v : *radial_) r->push_back(1 / v);
  }
  return Character(n_, std::move(e), std::move(r));
}

Character Character::operator*(const Character& rhs) const {
  if (rhs.exp_.size() != exp_.size()) throw AlphabetMismatch("characters on different alphabets");
  std::uint32_t m = std::lcm(n_, rhs.n_);
  Character a = rescaled(m), b = rhs.rescaled(m);
  std::vector<std::int64_t> e(exp_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = a.exp_[j] + b.exp_[j];
  std::optional<std::vector<mpq_class>> r;
  if (radial_ || rhs.radial_) {
    r.emplace();
    for (std::size_t j = 0; j < e.size(); ++j) r->push_back(radial_at(j) * rhs.radial_at(j));
  }
  return Character(m, std::move(e), std::move(r));
}

bool Character::operator==(const Character& rhs) const {
  if (rhs.exp_.size() != exp_.size()) return false;
  std::uint32_t m = std::lcm(n_, rhs.n_);
  auto a = rescaled(m), b = rhs.rescaled(m);
  if (a.exp_ != b.exp_) return false;
  for (std::size_t j = 0; j < exp_.size(); ++j)
    if (radial_at(j) != rhs.radial_at(j)) return false;
  return true;
}

Cyc Character::value(std::size_t j) const {
  const auto& f = CyclotomicField::get(n_);
  Cyc z = Cyc::zeta_power(f, exp_.at(j));
  if (radial_) z *= (*radial_)[j];
  return z;
}

Cyc Character::evaluate(const Word& w) const {
  std::int64_t e = 0;
  mpq_class r = 1;
  for (const auto& l : w.letters()) {
    if (l.gen >= exp_.size())
      throw AlphabetMismatch("character is not defined on generator " + std::to_string(l.gen));
    e += l.sign * exp_[l.gen];
    if (radial_) r *= l.sign > 0 ? (*radial_)[l.gen] : mpq_class(1 / (*radial_)[l.gen]);
  }
  Cyc z = Cyc::zeta_power(CyclotomicField::get(n_), e);
  z *= r;
  return z;
}

CharacterTuple::CharacterTuple(std::vector<Character> components) {
  std::uint32_t m = 1;
  for (const auto& c : components) m = std::lcm(m, c.order());
  for (auto& c : components) {
    if (!components.empty() && c.generator_count() != components.front().generator_count())
      throw AlphabetMismatch("tuple components live on different factor groups");
    comps_.push_back(c.rescaled(m));
  }
}

CharacterTuple CharacterTuple::trivial(std::size_t n, std::size_t factor_generators) {
  return CharacterTuple(std::vector<Character>(n, Character::trivial(factor_generators)));
}

bool CharacterTuple::is_trivial() const {
  for (const auto& c : comps_)
    if (!c.is_trivial()) return false;
  return true;
}

bool CharacterTuple::pair_is_inverse(std::size_t i, std::size_t j) const {
  return (comps_.at(i) * comps_.at(j)).is_trivial();
}

Character CharacterTuple::product_character() const {
  std::vector<std::int64_t> e;
  std::vector<mpq_class> r;
  bool radial = false;
  for (const auto& c : comps_) {
    for (std::size_t j = 0; j < c.generator_count(); ++j) {
      e.push_back(c.exponent(j));
      r.push_back(c.radial_at(j));
    }
    if (c.radial()) radial = true;
  }
  return Character(order(), std::move(e), radial ? std::optional(std::move(r)) : std::nullopt);
}

ValidationResult validate_character(const Presentation& p, const Character& chi) {
  if (chi.generator_count() != p.generator_count())
    throw AlphabetMismatch("character has " + std::to_string(chi.generator_count()) +
                           " values for a presentation with " + std::to_string(p.generator_count()) +
                           " generators");
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    if (!chi.evaluate(p.relators[k]).is_one())
      return {false, k, "relator " + format_word(p.relators[k], p.alphabet) + " does not map to 1"};
  return {};
}

ValidationResult validate_matrix_rep(const Presentation& p, const MatrixRep& rho) {
  if (rho.images.size() != p.generator_count())
    throw AlphabetMismatch("representation has the wrong number of generator images");
  const std::size_t d = rho.degree();
  for (const auto& m : rho.images) {
    if (m.rows() != d || m.cols() != d) return {false, std::nullopt, "generator images differ in size"};
    if (m.field().order() != 1) return {false, std::nullopt, "matrix entries must be rational"};
    Cyc det = m.determinant();
    if (det.is_zero()) return {false, std::nullopt, "generator image is singular"};
    if (rho.flavor == MatrixFlavor::SL && !det.is_one())
      return {false, std::nullopt, "SL flavor requires determinant 1"};
  }
  LinearRep lin = LinearRep::from_matrix(MatrixRep{rho.images, rho.flavor, false});
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    if (!lin.word_image(p.relators[k]).is_identity())
      return {false, k, "relator " + format_word(p.relators[k], p.alphabet) + " is not the identity"};
  return {};
}

LinearRep LinearRep::from_character(const Character& chi) {
  const auto& f = CyclotomicField::get(chi.order());
  LinearRep out(f, 1);
  for (std::size_t j = 0; j < chi.generator_count(); ++j) {
    FieldMatrix m(f, 1, 1), inv(f, 1, 1);
    Cyc v = chi.value(j);
    inv.set(0, 0, v.inverse());
    m.set(0, 0, std::move(v));
    out.images_.push_back(std::move(m));
    out.inverses_.push_back(std::move(inv));
  }
  return out;
}

LinearRep LinearRep::from_matrix(const MatrixRep& rho) {
  if (rho.adjoint) return adjoint_of(rho, rho.flavor);
  const auto& q = CyclotomicField::get(1);
  LinearRep out(q, rho.degree());
  for (const auto& m : rho.images) {
    out.images_.push_back(m);
    out.inverses_.push_back(m.inverse());
  }
  return out;
}

// Basis of sl_r: off-diagonal units E_ij (row-major), then H_k = E_kk - E_{k+1,k+1}.
// Basis of gl_r: all units E_ij row-major.
LinearRep LinearRep::adjoint_of(const MatrixRep& rho, MatrixFlavor flavor) {
  const auto& q = CyclotomicField::get(1);
  const std::size_t r = rho.degree();
  const bool sl = flavor == MatrixFlavor::SL;
  const std::size_t dim = sl ? r * r - 1 : r * r;

  auto basis_element = [&](std::size_t b) {
    FieldMatrix e(q, r, r);
    if (!sl) {
      e.set(b / r, b % r, Cyc(q, 1));
      return e;
    }
    std::size_t off = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        if (off++ == b) {
          e.set(i, j, Cyc(q, 1));
          return e;
        }
      }
    std::size_t k = b - (r * r - r);
    e.set(k, k, Cyc(q, 1));
    e.set(k + 1, k + 1, Cyc(q, -1));
    return e;
  };
  auto coordinates = [&](const FieldMatrix& x) {
    std::vector<Cyc> c;
    if (!sl) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) c.push_back(x(i, j));
      return c;
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (i != j) c.push_back(x(i, j));
    // Diagonal (d_1..d_r), trace zero: coefficient of H_k is d_1 + ... + d_k.
    Cyc acc(q);
    for (std::size_t k = 0; k + 1 < r; ++k) {
      acc += x(k, k);
      c.push_back(acc);
    }
    return c;
  };
  auto ad = [&](const FieldMatrix& g, const FieldMatrix& ginv) {
    FieldMatrix m(q, dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      auto c = coordinates(g * basis_element(b) * ginv);
      for (std::size_t a = 0; a < dim; ++a) m.set(a, b, c[a]);
    }
    return m;
  };

  LinearRep out(q, dim);
  for (const auto& g : rho.images) {
    FieldMatrix ginv = g.inverse();
    out.images_.push_back(ad(g, ginv));
    out.inverses_.push_back(ad(ginv, g));
  }
  return out;
}

FieldMatrix LinearRep::word_image(const Word& w) const {
  FieldMatrix m = FieldMatrix::identity(*field_, dim_);
  for (const auto& l : w.letters()) {
    if (l.gen >= images_.size())
      throw AlphabetMismatch("representation is not defined on generator " + std::to_string(l.gen));
    m = m * (l.sign > 0 ? images_[l.gen] : inverses_[l.gen]);
  }
  return m;
}

Cyc evaluate(const GroupRingElement& e, const Character& chi) {
  Cyc acc(CyclotomicField::get(chi.order()));
  for (const auto& [w, c] : e.terms()) {
    Cyc v = chi.evaluate(w);
    v *= mpq_class(c);
    acc += v;
  }
  return acc;
}

FieldMatrix evaluate(const GroupRingElement& e, const LinearRep& rho) {
  FieldMatrix acc(rho.field(), rho.dim(), rho.dim());
  for (const auto& [w, c] : e.terms()) acc = acc + rho.word_image(w).scaled(Cyc(rho.field(), mpq_class(c)));
  return acc;
}

Character parse_character_json(std::string_view text, const Alphabet& alphabet) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("character JSON: ") + e.what());
  }
  if (!j.contains("N") || !j["N"].is_number_integer()) throw Error("character JSON: missing integer `N`");
  std::int64_t n = j["N"].get<std::int64_t>();
  if (n <= 0) throw RangeError("character JSON: `N` must be positive");
  std::vector<std::int64_t> exps(alphabet.size(), 0);
  if (j.contains("values")) {
    for (auto& [name, v] : j["values"].items()) {
      auto g = alphabet.find(name);
      if (!g) throw AlphabetMismatch("character JSON: unknown generator `" + name + "`");
      if (!v.is_number_integer()) throw Error("character JSON: exponent for `" + name + "` is not an integer");
      exps[g->index] = v.get<std::int64_t>();
    }
  }
  std::optional<std::vector<mpq_class>> radial;
  if (j.contains("radial")) {
    radial.emplace(alphabet.size(), 1);
    for (auto& [name, v] : j["radial"].items()) {
      auto g = alphabet.find(name);
      if (!g) throw AlphabetMismatch("character JSON: unknown generator `" + name + "`");
      mpq_class r;
      try {
        r = mpq_class(v.is_string() ? v.get<std::string>() : v.dump());
      } catch (const std::invalid_argument&) {
        throw Error("character JSON: radial value for `" + name + "` is not a rational");
      }
      r.canonicalize();
      (*radial)[g->index] = r;
    }
  }
  return Character(static_cast<std::uint32_t>(n), std::move(exps), std::move(radial));
}

std::string character_to_json(const Character& chi, const Alphabet& alphabet) {
  nlohmann::json j;
  j["N"] = chi.order();
  j["values"] = nlohmann::json::object();
  for (std::size_t k = 0; k < chi.generator_count(); ++k) j["values"][alphabet.name(k)] = chi.exponent(k);
  if (chi.radial()) {
    j["radial"] = nlohmann::json::object();
    for (std::size_t k = 0; k < chi.generator_count(); ++k) j["radial"][alphabet.name(k)] = chi.radial_at(k).get_str();
  }
  return j.dump();
}

}  // namespace braidcoh
