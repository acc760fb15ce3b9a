#include "braidcoh/words.hpp"

#include <sstream>

#include "braidcoh/errors.hpp"

namespace braidcoh {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("empty generator name");
    if (!index_.emplace(names_[i], i).second)
      throw Error("duplicate generator name `" + names_[i] + "`");
  }
}

std::optional<Generator> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return Generator{it->second};
}

Word free_reduce(std::span<const Letter> letters, std::size_t alphabet_size) {
  Word out;
  auto& stack = out.letters_;
  stack.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.gen >= alphabet_size)
      throw AlphabetMismatch("generator index " + std::to_string(l.gen) +
                             " outside alphabet of size " + std::to_string(alphabet_size));
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return out;
}

Word Word::generator(std::uint32_t gen, int sign) {
  Letter l{gen, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
  return free_reduce(std::span<const Letter>(&l, 1), static_cast<std::size_t>(gen) + 1);
}

std::uint32_t Word::span_size() const {
  std::uint32_t m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen + 1);
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return free_reduce(inv, span_size());
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return free_reduce(cat, std::max(span_size(), rhs.span_size()));
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

GroupRingElement::GroupRingElement(const Word& w, mpz_class coeff) { add(w, coeff); }

mpz_class GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

GroupRingElement& GroupRingElement::add(const Word& w, const mpz_class& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
  GroupRingElement out = *this;
  out += rhs;
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
  GroupRingElement out = *this;
  out -= rhs;
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
  GroupRingElement out;
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : rhs.terms_) out.add(u * v, a * b);
  return out;
}

GroupRingElement fox_derivative(const Word& w, Generator x) {
  GroupRingElement result;
  // Prefixes of a reduced word are reduced, so the prefix is extended in place.
  Word prefix;
  std::vector<Letter> buf;
  buf.reserve(w.length());
  const std::size_t bound = std::max<std::size_t>(w.span_size(), x.index + 1);
  for (const Letter& l : w.letters()) {
    if (l.gen == x.index && l.sign == 1) result.add(prefix, 1);
    buf.push_back(l);
    prefix = free_reduce(buf, bound);
    if (l.gen == x.index && l.sign == -1) result.add(prefix, -1);
  }
  return result;
}

mpz_class augmentation(const GroupRingElement& e) {
  mpz_class s = 0;
  for (const auto& [w, c] : e.terms()) s += c;
  return s;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string name = tok;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      if (tok.substr(pos) != "^-1") throw Error("unsupported exponent in token `" + tok + "`");
      name = tok.substr(0, pos);
      sign = -1;
    }
    auto g = alphabet.find(name);
    if (!g) throw AlphabetMismatch("unknown generator `" + name + "`");
    letters.push_back({g->index, static_cast<std::int8_t>(sign)});
  }
  return free_reduce(letters, alphabet.size());
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string format_element(const GroupRingElement& e, const Alphabet& alphabet) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    std::string coeff = c.get_str();
    if (!out.empty()) out += (c > 0 ? " + " : " - ");
    else if (c < 0) out += "-";
    mpz_class a = abs(c);
    std::string body = w.empty() ? "1" : format_word(w, alphabet);
    if (a != 1) body = a.get_str() + "*(" + body + ")";
    else if (!w.empty() && w.length() > 1) body = "(" + body + ")";
    out += body;
  }
  return out;
}

}  // namespace braidcoh
