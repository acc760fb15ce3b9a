#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidcoh/acceptance.hpp"
#include "braidcoh/anchors.hpp"
#include "braidcoh/cohomology.hpp"
#include "braidcoh/errors.hpp"
#include "braidcoh/leray.hpp"
#include "braidcoh/random.hpp"
#include "braidcoh/verdict.hpp"

namespace braidcoh::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Flags {
  std::string catalog, file, space, char_path, rep_path, mode = "exact", flavor = "pure";
  std::string group_kind = "sl", charp_group;
  int n = 0, genus = 0, samples = 0, target_genus = 0, witness = 0;
  std::uint64_t seed = kDefaultSeed, p = 0;
  std::vector<int> ranks;
  std::vector<std::string> tags;
  std::string repo_root;
  bool json = false;
};

Json number(const mpz_class& z) { return z.fits_slong_p() ? Json(z.get_si()) : Json(z.get_str()); }

Json numbers(const std::vector<mpz_class>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(number(z));
  return a;
}

Json anchors(const std::vector<std::string>& keys) {
  Json a = Json::array();
  std::set<std::string> seen;
  for (const auto& k : keys)
    if (!k.empty() && seen.insert(k).second) a.push_back({{"key", k}, {"statement", anchor(k)}});
  return a;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

std::string key_of_statement(const std::string& statement) {
  for (const auto& [k, v] : anchor_table())
    if (v == statement) return k;
  return {};
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read `" + path + "`");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

RankOptions rank_options(const Flags& f) {
  return {f.mode == "fast" ? RankMode::Fast : RankMode::Exact, f.seed};
}

Presentation load_group(const Flags& f) {
  if (f.catalog.empty() == f.file.empty()) throw PreconditionError("give exactly one of --catalog and --file");
  return f.catalog.empty() ? load_external(f.file) : catalog(CatalogId::parse(f.catalog));
}

std::string group_label(const Flags& f) { return f.catalog.empty() ? f.file : f.catalog; }

SpaceSpec require_space(const Flags& f) {
  if (f.space.empty()) throw PreconditionError("--space is required");
  return SpaceSpec::parse(f.space);
}

int require_n(const Flags& f) {
  if (f.n < 2) throw PreconditionError("--n must be at least 2");
  return f.n;
}

// Generators of one factor of X^n.
Alphabet factor_alphabet(const SpaceSpec& s) {
  if (s.kind == SpaceSpec::Kind::CStar) return Alphabet({"t"});
  if (s.kind == SpaceSpec::Kind::CompactGenus) return surface_group(s.genus).alphabet;
  if (s.kind == SpaceSpec::Kind::Sphere) return Alphabet();
  throw OutOfScope("twisted coefficients are available for the sphere, compact genus and c-star");
}

// `{"components": [<character>, ...]}` or a bare array of characters, each
// in the single-character format over the factor alphabet.
CharacterTuple load_tuple(const std::string& path, const Alphabet& factor) {
  Json j;
  try {
    j = Json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("tuple JSON: ") + e.what());
  }
  const Json comps = j.is_array() ? j : (j.contains("components") ? j["components"] : Json());
  if (!comps.is_array() || comps.empty()) throw Error("tuple JSON: expected a nonempty `components` array");
  std::vector<Character> out;
  for (const auto& c : comps) out.push_back(parse_character_json(c.dump(), factor));
  return CharacterTuple(std::move(out));
}

Json tuple_json(const CharacterTuple& rho, const Alphabet& factor) {
  Json a = Json::array();
  for (const auto& c : rho.components()) a.push_back(Json::parse(character_to_json(c, factor)));
  return a;
}

// Components are trivial, inverse to an earlier one, or uniform (N <= 12).
CharacterTuple random_tuple(Rng& rng, int n, std::size_t gens) {
  const auto N = static_cast<std::uint32_t>(rng.between(2, 12));
  std::vector<std::vector<std::int64_t>> e(static_cast<std::size_t>(n), std::vector<std::int64_t>(gens, 0));
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto mode = rng.below(10);
    if (mode < 2) continue;
    if (mode < 6 && i > 0) {
      const auto k = rng.below(i);
      for (std::size_t j = 0; j < gens; ++j) e[i][j] = (N - e[k][j]) % N;
      continue;
    }
    for (auto& x : e[i]) x = static_cast<std::int64_t>(rng.below(N));
  }
  std::vector<Character> comps;
  for (auto& x : e) comps.emplace_back(N, std::move(x));
  return CharacterTuple(std::move(comps));
}

// ---- subcommands ----

Json cmd_abelianize(const Flags& f) {
  const Presentation p = load_group(f);
  const AbelianProfile a = abelianization(p);
  Json j;
  j["group"] = group_label(f);
  j["generators"] = p.generator_count();
  j["rank"] = a.free_rank;
  j["torsion"] = numbers(a.torsion);
  if (!p.source.empty()) j["source"] = p.source;
  j["anchors"] = Json::array();
  return j;
}

Json h1_entry(const Presentation& p, const Character& chi, const RankOptions& opt) {
  Json e;
  e["character"] = Json::parse(character_to_json(chi, p.alphabet));
  e["h0"] = h0_dim(p, chi, opt);
  e["h1"] = h1_dim(p, chi, opt);
  return e;
}

Json cmd_h1(const Flags& f) {
  const Presentation p = load_group(f);
  const RankOptions opt = rank_options(f);
  Json j;
  j["group"] = group_label(f);
  j["mode"] = f.mode;
  if (!f.char_path.empty()) {
    merge(j, h1_entry(p, parse_character_json(read_text(f.char_path), p.alphabet), opt));
  } else if (f.samples > 0) {
    Rng rng(f.seed);
    Json list = Json::array();
    const std::size_t limit = 100 * static_cast<std::size_t>(f.samples);
    for (std::size_t attempt = 0; attempt < limit && list.size() < static_cast<std::size_t>(f.samples); ++attempt) {
      const auto N = static_cast<std::uint32_t>(rng.between(2, 12));
      std::vector<std::int64_t> e(p.generator_count());
      for (auto& x : e) x = static_cast<std::int64_t>(rng.below(N));
      const Character chi(N, e);
      if (!validate_character(p, chi).ok) continue;
      Json entry = h1_entry(p, chi, opt);
      entry["index"] = list.size();
      list.push_back(std::move(entry));
    }
    j["seed"] = f.seed;
    j["samples"] = std::move(list);
  } else {
    throw PreconditionError("give --char <json> or --samples <k>");
  }
  j["anchors"] = anchors({"fox.h1"});
  return j;
}

Json cmd_b1(const Flags& f) {
  const SpaceSpec s = require_space(f);
  const BettiReport b = b1_pure_braid(s, require_n(f));
  Json j;
  j["space"] = s.str();
  j["n"] = f.n;
  j["h1_rank"] = b.free_rank;
  j["divisors_all_one"] = b.divisors_all_one;
  j["ranks"] = {{"e2_10", b.rank10}, {"e2_01", b.rank01}, {"e2_20", b.rank20}};
  j["d2_rank"] = b.d2_rank;
  j["d2_injective"] = b.d2_injective;
  j["divisors"] = numbers(b.divisors);
  j["torsion"] = numbers(b.torsion);
  j["anchors"] = anchors({b.anchor_key});
  return j;
}

Json twisted_entry(const SpaceSpec& s, int n, const CharacterTuple& rho, const Alphabet& factor,
                   const RankOptions& opt) {
  const TwistedReport t = twisted_report(s, n, rho);
  Json j;
  j["tuple"] = tuple_json(rho, factor);
  j["ranks"] = {{"e2_10", t.e2_10}, {"e2_01", t.e2_01}, {"e2_20", t.e2_20}};
  j["d2_rank"] = t.d2_rank;
  j["h1"] = t.h1;
  Json pairs = Json::array();
  for (auto [a, b] : t.pairs) pairs.push_back({a, b});
  j["pairs"] = pairs;
  j["trivial_routed"] = t.trivial_routed;
  if (s.kind == SpaceSpec::Kind::CStar) j["h1_via_artin_pure_braid"] = h1_cstar_via_artin(n, rho, opt);
  return j;
}

Json cmd_twisted(const Flags& f) {
  const SpaceSpec s = require_space(f);
  const int n = require_n(f);
  const Alphabet factor = factor_alphabet(s);
  const RankOptions opt = rank_options(f);
  Json j;
  j["space"] = s.str();
  j["n"] = n;
  std::string key;
  if (!f.char_path.empty()) {
    const CharacterTuple rho = load_tuple(f.char_path, factor);
    key = twisted_report(s, n, rho).anchor_key;
    merge(j, twisted_entry(s, n, rho, factor, opt));
  } else if (f.samples > 0) {
    Rng rng(f.seed);
    Json list = Json::array();
    for (int i = 0; i < f.samples; ++i) {
      const CharacterTuple rho = random_tuple(rng, n, factor.size());
      if (key.empty()) key = twisted_report(s, n, rho).anchor_key;
      Json e = twisted_entry(s, n, rho, factor, opt);
      e["index"] = i;
      list.push_back(std::move(e));
    }
    j["seed"] = f.seed;
    j["samples"] = std::move(list);
  } else {
    throw PreconditionError("give --char <json> or --samples <k>");
  }
  j["anchors"] = anchors({key});
  return j;
}

Json cmd_e2(const Flags& f) {
  const SpaceSpec s = require_space(f);
  const int n = require_n(f);
  const E2Fragment e = e2_trivial(s, n);
  const SNFResult snf = smith_normal_form(e.d2);
  Json j;
  j["space"] = e.space;
  j["n"] = n;
  j["ranks"] = {{"e2_10", e.rank10}, {"e2_01", e.rank01}, {"e2_20", e.rank20}};
  j["labels"] = {{"e2_10", e.labels10}, {"e2_01", e.labels01}, {"e2_20", e.labels20}};
  j["d2_rank"] = snf.divisors.size();
  j["divisors"] = numbers(snf.divisors);
  Json rows = Json::array();
  for (std::size_t r = 0; r < e.d2.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < e.d2.cols(); ++c) row.push_back(number(e.d2(r, c)));
    rows.push_back(std::move(row));
  }
  j["d2"] = std::move(rows);
  j["anchors"] = anchors(s.kind == SpaceSpec::Kind::CStar ? std::vector<std::string>{"e2.page"}
                                                          : std::vector<std::string>{"e2.page", "e2.diagonal"});
  return j;
}

Json cmd_sigma1(const Flags& f) {
  const SpaceSpec s = require_space(f);
  const int n = require_n(f);
  const JumpLocusDescription d = sigma1_components(s, n);
  std::vector<std::string> keys{d.anchor_key};
  Json j;
  j["space"] = d.space;
  j["n"] = n;
  j["ambient"] = d.ambient;
  j["ambient_dim"] = d.ambient_dim;
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back({{"label", c.label}, {"dim", c.dim}, {"condition", c.condition}});
  j["components"] = std::move(comps);
  if (f.target_genus > 0) {
    const SurjectionReport r = surjection_excluded(s, n, f.target_genus);
    j["surjection"] = {{"target_genus", f.target_genus},
                       {"excluded", r.excluded},
                       {"conditional", r.conditional},
                       {"reason", r.reason}};
    keys.push_back(r.anchor_key);
  }
  if (f.witness > 0) {
    if (s.kind != SpaceSpec::Kind::CompactGenus || s.genus != 1)
      throw OutOfScope("the infinite-locus witness is listed for genus:1");
    Json w = Json::array();
    for (const auto& rho : sigma1_infinite_witness(n, static_cast<std::size_t>(f.witness)))
      w.push_back(tuple_json(rho, factor_alphabet(s)));
    j["witness"] = std::move(w);
    keys.push_back("sigma1.infinite");
  }
  j["anchors"] = anchors(keys);
  return j;
}

Json cmd_membership(const Flags& f) {
  const SpaceSpec s = require_space(f);
  const int n = require_n(f);
  if (f.char_path.empty()) throw PreconditionError("--char is required");
  const Alphabet factor = factor_alphabet(s);
  const CharacterTuple rho = load_tuple(f.char_path, factor);
  const MembershipReport m = sigma1_membership(s, n, rho);
  Json j;
  j["space"] = s.str();
  j["n"] = n;
  j["tuple"] = tuple_json(rho, factor);
  j["trivial"] = m.trivial;
  j["member"] = m.member;
  j["h1"] = m.h1;
  j["components"] = m.components;
  j["anchors"] = anchors(m.anchor_keys);
  return j;
}

Json cmd_charvar(const Flags& f) {
  const MatrixFlavor fl = f.group_kind == "gl" ? MatrixFlavor::GL : MatrixFlavor::SL;
  if (f.ranks.empty()) throw PreconditionError("--ranks is required");
  const CharVarDims d = charvar_dims(f.genus, f.ranks, fl);
  Json j;
  j["genus"] = f.genus;
  j["group"] = f.group_kind;
  j["ranks"] = f.ranks;
  j["hom_dims"] = d.hom_dims;
  j["char_dims"] = d.char_dims;
  j["tangent"] = d.tangent;
  j["anchors"] = anchors({fl == MatrixFlavor::GL ? "charvar.gl" : "charvar.sl"});
  return j;
}

// `{"flavor": "SL", "images": {"a1": [[1, 1], [0, 1]], ...}}`; entries are
// integers or rational strings.
MatrixRep load_rep(const std::string& path, const Presentation& p) {
  Json j;
  try {
    j = Json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("representation JSON: ") + e.what());
  }
  MatrixRep rho;
  const std::string fl = j.value("flavor", std::string("SL"));
  if (fl != "SL" && fl != "GL") throw Error("representation JSON: flavor must be SL or GL");
  rho.flavor = fl == "GL" ? MatrixFlavor::GL : MatrixFlavor::SL;
  if (!j.contains("images") || !j["images"].is_object()) throw Error("representation JSON: missing `images` object");
  for (const auto& name : p.alphabet.names()) {
    if (!j["images"].contains(name)) throw Error("representation JSON: no image for `" + name + "`");
    const Json& m = j["images"][name];
    if (!m.is_array() || m.empty() || !m[0].is_array()) throw Error("representation JSON: `" + name + "` is not a matrix");
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<mpq_class> entries;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != cols) throw Error("representation JSON: ragged matrix for `" + name + "`");
      for (const auto& x : row) {
        mpq_class q;
        try {
          q = mpq_class(x.is_string() ? x.get<std::string>() : x.dump());
        } catch (const std::invalid_argument&) {
          throw Error("representation JSON: bad entry in `" + name + "`");
        }
        q.canonicalize();
        entries.push_back(q);
      }
    }
    if (rows != cols) throw Error("representation JSON: `" + name + "` is not square");
    rho.images.push_back(FieldMatrix::from_rationals(rows, cols, entries));
  }
  return rho;
}

Json tangent_entry(const Presentation& p, const MatrixRep& rho, const RankOptions& opt) {
  const TangentDims t = tangent_dim_at(p, rho, opt);
  return {{"z1", t.z1}, {"h0", t.h0}, {"h1", t.h1}};
}

Json cmd_tangent(const Flags& f) {
  const Presentation p = load_group(f);
  const RankOptions opt = rank_options(f);
  Json j;
  j["group"] = group_label(f);
  j["mode"] = f.mode;
  if (!f.rep_path.empty()) {
    merge(j, tangent_entry(p, load_rep(f.rep_path, p), opt));
  } else if (f.samples > 0) {
    const CatalogId id = f.catalog.empty() ? CatalogId::free(0) : CatalogId::parse(f.catalog);
    if (id.kind != CatalogId::Kind::Surface || id.param < 1)
      throw PreconditionError("--samples needs --catalog surface:<g> with g >= 1");
    const SL2SampleBatch batch = sample_sl2_surface_reps(id.param, static_cast<std::size_t>(f.samples), f.seed);
    Json list = Json::array();
    for (std::size_t i = 0; i < batch.accepted.size(); ++i) {
      Json e = tangent_entry(p, batch.accepted[i], opt);
      e["index"] = i;
      list.push_back(std::move(e));
    }
    j["seed"] = f.seed;
    j["rejected_reducible"] = batch.rejected_reducible;
    j["samples"] = std::move(list);
  } else {
    throw PreconditionError("give --rep <json> or --samples <k>");
  }
  j["anchors"] = anchors({"charvar.sl"});
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  Json trace = Json::array();
  std::vector<std::string> keys;
  for (const auto& st : v.trace) {
    trace.push_back({{"rule", st.rule}, {"anchor", st.anchor}, {"text", st.text}});
    keys.push_back(key_of_statement(st.anchor));
  }
  j["rules"] = [&] {
    Json r = Json::array();
    for (const auto& st : v.trace) r.push_back(st.rule);
    return r;
  }();
  j["trace"] = std::move(trace);
  Json w = Json::object();
  for (const auto& [k, vals] : v.witnesses) w[k] = vals;
  j["witnesses"] = std::move(w);
  j["anchors"] = anchors(keys);
  return j;
}

Json cmd_verdict(const Flags& f) {
  const SpaceSpec s = require_space(f);
  const BraidFlavor fl = parse_flavor(f.flavor);
  Json j;
  j["space"] = s.str();
  j["n"] = f.n;
  j["flavor"] = to_string(fl);
  merge(j, verdict_json(kahler_verdict(s, f.n, fl)));
  return j;
}

Json cmd_charp(const Flags& f) {
  if (f.charp_group.empty()) throw PreconditionError("--group is required");
  const CharPGroup g = CharPGroup::parse(f.charp_group);
  Json j;
  j["group"] = g.str();
  j["p"] = f.p;
  merge(j, verdict_json(charp_verdict(g, f.p)));
  return j;
}

Json cmd_verify(const Flags& f, bool& failed) {
  AcceptanceOptions opt;
  opt.seed = f.seed;
  opt.repo_root = f.repo_root.empty() ? default_repo_root() : std::filesystem::path(f.repo_root);
  std::vector<int> ids;
  const bool all = f.tags.empty() || std::find(f.tags.begin(), f.tags.end(), "all") != f.tags.end();
  if (all)
    for (const auto& c : acceptance_criteria()) ids.push_back(c.id);
  else
    for (const auto& t : f.tags) ids.push_back(criterion_id(t));
  Json list = Json::array();
  failed = false;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, opt);
    failed = failed || !r.passed;
    list.push_back({{"id", r.id}, {"tag", r.tag}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  Json j;
  j["seed"] = f.seed;
  j["criteria"] = std::move(list);
  j["passed"] = !failed;
  j["anchors"] = Json::array();
  return j;
}

void emit(const Json& j, bool as_json, std::ostream& out) {
  if (as_json) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Homological invariants of surface braid groups", "braidcoh"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", f.json, "Single-line JSON output");
  app.add_option("--seed", f.seed, "Seed for sampling and for the fast-mode prime");
  app.add_option("--mode", f.mode, "Rank computation: exact or fast (modular)")
      ->check(CLI::IsMember({"exact", "fast"}));

  auto group_opts = [&](CLI::App* s) {
    s->add_option("--catalog", f.catalog, "Catalog group: surface:g, free:k, artin_pure:n, products with *");
    s->add_option("--file", f.file, "Presentation file");
  };
  auto space_opts = [&](CLI::App* s) {
    s->add_option("--space", f.space, "sphere, plane, disk, c-star, genus:g, hyperbolic:k, higher:d[...]");
    s->add_option("--n", f.n, "Number of points");
  };

  auto* abel = app.add_subcommand("abelianize", "Abelianization of a presented group");
  group_opts(abel);
  auto* h1 = app.add_subcommand("h1", "Twisted H^1 of a presented group via Fox calculus");
  group_opts(h1);
  h1->add_option("--char", f.char_path, "Character JSON file");
  h1->add_option("--samples", f.samples, "Number of seeded random characters");
  auto* b1 = app.add_subcommand("b1", "First Betti number of a pure surface braid group");
  space_opts(b1);
  auto* tw = app.add_subcommand("twisted", "Twisted H^1 of a pure surface braid group");
  space_opts(tw);
  tw->add_option("--char", f.char_path, "Character tuple JSON file");
  tw->add_option("--samples", f.samples, "Number of seeded random tuples");
  auto* e2 = app.add_subcommand("e2", "Low-degree E_2 page with integer coefficients");
  space_opts(e2);
  auto* sg = app.add_subcommand("sigma1", "Components of the first jump locus");
  space_opts(sg);
  sg->add_option("--target-genus", f.target_genus, "Test surjections onto Pi_h");
  sg->add_option("--witness", f.witness, "List this many members of an infinite locus (genus:1)");
  auto* mem = app.add_subcommand("membership", "Jump-locus membership of a character tuple");
  space_opts(mem);
  mem->add_option("--char", f.char_path, "Character tuple JSON file");
  auto* cv = app.add_subcommand("charvar", "Character-variety dimensions for Pi_g^n");
  cv->add_option("--genus", f.genus, "Genus g >= 2")->required();
  cv->add_option("--ranks", f.ranks, "Matrix size per factor, comma separated")->delimiter(',');
  cv->add_option("--group", f.group_kind, "sl or gl")->check(CLI::IsMember({"sl", "gl"}));
  auto* tg = app.add_subcommand("tangent", "Zariski tangent space at a representation");
  group_opts(tg);
  tg->add_option("--rep", f.rep_path, "Representation JSON file");
  tg->add_option("--samples", f.samples, "Number of seeded SL_2 samples (surface groups)");
  auto* vd = app.add_subcommand("verdict", "Kahler verdict for a surface braid group");
  space_opts(vd);
  vd->add_option("--flavor", f.flavor, "pure or full")->check(CLI::IsMember({"pure", "full"}));
  auto* cp = app.add_subcommand("charp", "Characteristic-p variant of the verdict");
  cp->add_option("--group", f.charp_group, "artin_pure:n, sphere_pure:n, surface_pure:g:n");
  cp->add_option("--p", f.p, "Prime characteristic")->required();
  auto* vf = app.add_subcommand("verify", "Run acceptance criteria by id or tag (default: all)");
  vf->add_option("--tag", f.tags, "Criterion id or tag; repeatable");
  vf->add_option("--repo-root", f.repo_root, "Directory holding data/ and tests/fixtures/");

  std::vector<std::string> argv_s{"braidcoh"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Json j;
    bool failed = false;
    if (abel->parsed()) j = cmd_abelianize(f);
    else if (h1->parsed()) j = cmd_h1(f);
    else if (b1->parsed()) j = cmd_b1(f);
    else if (tw->parsed()) j = cmd_twisted(f);
    else if (e2->parsed()) j = cmd_e2(f);
    else if (sg->parsed()) j = cmd_sigma1(f);
    else if (mem->parsed()) j = cmd_membership(f);
    else if (cv->parsed()) j = cmd_charvar(f);
    else if (tg->parsed()) j = cmd_tangent(f);
    else if (vd->parsed()) j = cmd_verdict(f);
    else if (cp->parsed()) j = cmd_charp(f);
    else if (vf->parsed()) j = cmd_verify(f, failed);
    emit(j, f.json, out);
    return failed ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace braidcoh::cli
