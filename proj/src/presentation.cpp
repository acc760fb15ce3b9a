#include "braidcoh/presentation.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "braidcoh/errors.hpp"

namespace braidcoh {

void Presentation::check() const {
  for (const auto& r : relators) {
    if (r.empty()) throw Error("relator reduces to the empty word");
    if (r.span_size() > alphabet.size()) throw AlphabetMismatch("relator uses a generator outside the alphabet");
  }
}

namespace {

int parse_positive_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("bad integer in " + std::string(what));
  return v;
}

Word gen(std::uint32_t i, int sign = 1) { return Word::generator(i, sign); }

}  // namespace

CatalogId CatalogId::parse(std::string_view text) {
  if (text.find('*') != std::string_view::npos) {
    std::vector<CatalogId> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('*', start);
      if (end == std::string_view::npos) end = text.size();
      parts.push_back(parse(text.substr(start, end - start)));
      start = end + 1;
    }
    return product(std::move(parts));
  }
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("catalog id needs the form kind:param, got `" + std::string(text) + "`");
  std::string_view kind = text.substr(0, colon);
  int param = parse_positive_int(text.substr(colon + 1), "catalog id");
  if (kind == "surface") return surface(param);
  if (kind == "free") return free(param);
  if (kind == "artin_pure") return artin_pure(param);
  throw Error("unknown catalog kind `" + std::string(kind) + "`");
}

std::string CatalogId::str() const {
  switch (kind) {
    case Kind::Surface: return "surface:" + std::to_string(param);
    case Kind::Free: return "free:" + std::to_string(param);
    case Kind::ArtinPure: return "artin_pure:" + std::to_string(param);
    case Kind::Product: {
      std::string out;
      for (const auto& f : factors) out += (out.empty() ? "" : "*") + f.str();
      return out;
    }
  }
  return {};
}

Presentation catalog(const CatalogId& id) {
  switch (id.kind) {
    case CatalogId::Kind::Surface: return surface_group(id.param);
    case CatalogId::Kind::Free: return free_group(id.param);
    case CatalogId::Kind::ArtinPure: return artin_pure_braid(id.param);
    case CatalogId::Kind::Product: {
      if (id.factors.size() < 2) throw Error("a product needs at least two factors");
      std::vector<Presentation> fs;
      for (const auto& f : id.factors) fs.push_back(catalog(f));
      return direct_product(fs);
    }
  }
  throw Error("unreachable catalog kind");
}

Presentation surface_group(int g) {
  if (g < 0) throw RangeError("genus must be nonnegative");
  Presentation p;
  if (g == 0) {
    p.warnings.push_back("surface(0) is the trivial group; returning the empty presentation");
    return p;
  }
  std::vector<std::string> names;
  if (g == 1) {
    names = {"a", "b"};
  } else {
    for (int k = 1; k <= g; ++k) {
      names.push_back("a" + std::to_string(k));
      names.push_back("b" + std::to_string(k));
    }
  }
  p.alphabet = Alphabet(names);
  Word rel;
  for (int k = 0; k < g; ++k) rel = rel * commutator(gen(2 * k), gen(2 * k + 1));
  p.relators.push_back(rel);
  return p;
}

Presentation free_group(int k) {
  if (k < 0) throw RangeError("free rank must be nonnegative");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    names.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  Presentation p;
  p.alphabet = Alphabet(names);
  return p;
}

// Artin's presentation of the pure braid group of the plane. For generators
// A_rs, A_ij with r < s, i < j and s < j:
//   A_rs^-1 A_ij A_rs = A_ij                              if s < i or i < r
//                     = A_rj A_ij A_rj^-1                 if s = i
//                     = A_rj A_sj A_ij A_sj^-1 A_rj^-1     if i = r
//                     = [A_rj, A_sj] A_ij [A_rj, A_sj]^-1  if r < i < s
// Each relation is stored as the relator lhs * rhs^-1.
Presentation artin_pure_braid(int n) {
  if (n < 1) throw RangeError("strand count must be positive");
  Presentation p;
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> index(n + 1, std::vector<std::uint32_t>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      index[i][j] = static_cast<std::uint32_t>(names.size());
      names.push_back("A" + std::to_string(i) + "_" + std::to_string(j));
    }
  p.alphabet = Alphabet(names);
  auto A = [&](int i, int j, int sign = 1) { return gen(index[i][j], sign); };

  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (!(s < j)) continue;
          Word lhs = A(r, s, -1) * A(i, j) * A(r, s);
          Word rhs;
          if (s < i || i < r) {
            rhs = A(i, j);
          } else if (s == i) {
            rhs = A(r, j) * A(i, j) * A(r, j, -1);
          } else if (i == r) {
            rhs = A(r, j) * A(s, j) * A(i, j) * A(s, j, -1) * A(r, j, -1);
          } else {  // r < i < s < j
            Word c = commutator(A(r, j), A(s, j));
            rhs = c * A(i, j) * c.inverse();
          }
          p.relators.push_back(lhs * rhs.inverse());
        }
  return p;
}

Presentation direct_product(const std::vector<Presentation>& factors) {
  std::vector<std::string> names;
  std::vector<std::uint32_t> offset;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    offset.push_back(static_cast<std::uint32_t>(names.size()));
    for (const auto& nm : factors[k].alphabet.names()) names.push_back(nm + "_" + std::to_string(k + 1));
  }
  Presentation p;
  p.alphabet = Alphabet(names);
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (const auto& r : factors[k].relators) {
      std::vector<Letter> shifted;
      for (auto l : r.letters()) shifted.push_back({l.gen + offset[k], l.sign});
      p.relators.push_back(free_reduce(shifted, names.size()));
    }
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (std::size_t l = k + 1; l < factors.size(); ++l)
      for (std::uint32_t x = 0; x < factors[k].generator_count(); ++x)
        for (std::uint32_t y = 0; y < factors[l].generator_count(); ++y)
          p.relators.push_back(commutator(gen(offset[k] + x), gen(offset[l] + y)));
  return p;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::string_view body = std::string_view(line).substr(first);
    if (body.front() == '#') continue;
    auto starts = [&](std::string_view key) { return body.substr(0, key.size()) == key; };
    if (starts("gens:")) {
      if (have_gens) throw ParseError(lineno, "second `gens:` line");
      std::istringstream toks{std::string(body.substr(5))};
      std::vector<std::string> names;
      std::string tok;
      while (toks >> tok) {
        if (tok.find('^') != std::string::npos || tok.find('#') != std::string::npos)
          throw ParseError(lineno, "invalid generator name `" + tok + "`");
        names.push_back(tok);
      }
      if (names.empty()) throw ParseError(lineno, "empty generator list");
      try {
        p.alphabet = Alphabet(names);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
      have_gens = true;
    } else if (starts("source:")) {
      auto s = body.substr(7);
      auto b = s.find_first_not_of(" \t");
      p.source = b == std::string_view::npos ? "" : std::string(s.substr(b));
    } else if (starts("rel:")) {
      if (!have_gens) throw ParseError(lineno, "`rel:` before `gens:`");
      Word w;
      try {
        w = parse_word(body.substr(4), p.alphabet);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
      if (w.empty()) throw ParseError(lineno, "relator reduces to the empty word");
      p.relators.push_back(std::move(w));
    } else {
      throw ParseError(lineno, "unrecognized line `" + std::string(body) + "`");
    }
  }
  if (!have_gens) throw ParseError(lineno == 0 ? 1 : lineno, "missing `gens:` line");
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& n : p.alphabet.names()) out += " " + n;
  if (!p.source.empty()) out += "\nsource: " + p.source;
  for (const auto& r : p.relators) out += "\nrel: " + format_word(r, p.alphabet);
  return out;
}

Presentation load_external(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open presentation file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Presentation p = parse_presentation(buf.str());
  if (p.source.empty()) p.source = path.filename().string();
  return p;
}

}  // namespace braidcoh
