// Command-line workbench: generate certificate-friendly sets, analyze their
// additive structure, extract low-query subsets, replay the probing protocol,
// verify the certificate families, and run the reproducible report suite.
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "addcomb/chang.hpp"
#include "addcomb/config.hpp"
#include "addcomb/exactcmp.hpp"
#include "addcomb/fiber_tree.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/io.hpp"
#include "addcomb/moments.hpp"
#include "addcomb/pfr.hpp"
#include "addcomb/suite.hpp"
#include "addcomb/tree_stats.hpp"
#include "addcomb/valuation.hpp"

namespace {

using addcomb::Eps;
using addcomb::Int;
using addcomb::Rat;
using Json = nlohmann::ordered_json;

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Eps parse_eps_text(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_s = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
  try {
    const unsigned long num = std::stoul(num_s);
    const unsigned long den = std::stoul(den_s);
    if (num == 0 || den == 0 || num > den) {
      throw std::invalid_argument("epsilon must be a rational in (0, 1]");
    }
    return Eps{num, den};
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("epsilon: expected p/q, got '" + text + "'");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

addcomb::SetFile load_set(const std::string& path) {
  return addcomb::parse_set_text(slurp(path));
}

void write_or_print(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::invalid_argument("cannot open output file: " + out);
  f << text;
}

/// Exponent of p in x (x positive).
unsigned long valuation_of(const Int& x, const Int& p) {
  Int reduced;
  return static_cast<unsigned long>(
      mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// Options shared by most subcommands, filled by CLI11.
struct CommonOpts {
  std::string config_path;
  std::string input;
  std::string out;
  std::string epsilon;
  std::uint64_t seed = 0;
  bool seed_set = false;

  addcomb::RunConfig config() const {
    addcomb::RunConfig cfg = config_path.empty()
                                 ? addcomb::RunConfig{}
                                 : addcomb::RunConfig::from_file(config_path);
    if (seed_set) cfg.seed = seed;
    cfg.validate();
    return cfg;
  }

  Eps eps_or(const addcomb::RunConfig& cfg) const {
    return epsilon.empty() ? cfg.epsilon : parse_eps_text(epsilon);
  }
};

int finish(const std::string& out, Json j, const addcomb::Ledger& led) {
  const bool pass = addcomb::all_checks_pass(led);
  j["checks"] = addcomb::ledger_to_json(led);
  j["all_pass"] = pass;
  write_or_print(out, j.dump(2) + "\n");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_generate(const CommonOpts& opts, const std::string& spec_text) {
  const addcomb::RunConfig cfg = opts.config();
  addcomb::GeneratorSpec spec = addcomb::GeneratorSpec::parse(spec_text);
  if (opts.seed_set) {
    spec.seed = opts.seed;
  } else if (spec_text.find("seed=") == std::string::npos) {
    spec.seed = cfg.seed;
  }
  const addcomb::GeneratedSet g = addcomb::generate(spec, cfg.max_points);
  addcomb::SetFile sf;
  if (g.is_lattice()) {
    sf.value = g.lattice();
  } else {
    sf.value = g.ints();
  }
  write_or_print(opts.out, addcomb::serialize_set(sf));
  return 0;
}

int cmd_analyze(const CommonOpts& opts) {
  const addcomb::RunConfig cfg = opts.config();
  const addcomb::SetFile sf = load_set(opts.input);

  Json j;
  addcomb::Ledger led;
  addcomb::LatticeSet domain;
  if (sf.is_lattice()) {
    domain = sf.lattice();
    j["input"] = {{"kind", "lattice"},
                  {"size", domain.size()},
                  {"dimension", domain.dimension()}};
  } else {
    const addcomb::IntSet& a = sf.ints();
    const addcomb::ValuationImage vi = addcomb::valuation_map(a);
    domain = vi.points;
    j["input"] = {{"kind", "integers"}, {"size", a.size()}};
    Json basis = Json::array();
    for (const Int& p : vi.basis.primes) basis.push_back(p.get_str());
    j["basis"] = std::move(basis);
    const addcomb::DoublingStats ds = addcomb::doubling_stats(a, cfg.max_points);
    j["doubling"] = {{"sumset_size", ds.sumset_size.get_str()},
                     {"product_size", ds.product_size.get_str()},
                     {"k_plus", rat_str(ds.k_plus)},
                     {"k_star", rat_str(ds.k_star)}};
  }

  const addcomb::FiberTree ft = addcomb::build_fiber_tree(domain);
  const auto bin = addcomb::max_binary_subtree(ft.tree, false);
  const Int sum_size(static_cast<unsigned long>(
      addcomb::sumset(domain, domain, cfg.max_points).size()));
  j["tree"] = {{"leaf_count", ft.tree.leaf_count()},
               {"branch_depth", addcomb::branch_depth(ft.tree)},
               {"max_binary_subtree", bin.size}};
  j["sumset_size"] = sum_size.get_str();

  led.push_back(addcomb::doubling_consistency_check(domain, cfg.max_points));
  return finish(opts.out, std::move(j), led);
}

struct ExtractSetup {
  addcomb::LatticeSet domain;
  std::optional<addcomb::ValuationImage> image;  // set for integer inputs
};

ExtractSetup extract_domain(const addcomb::SetFile& sf) {
  ExtractSetup s;
  if (sf.is_lattice()) {
    s.domain = sf.lattice();
  } else {
    s.image = addcomb::valuation_map(sf.ints());
    s.domain = s.image->points;
  }
  return s;
}

Json extraction_json(const addcomb::ExtractionResult& res, const ExtractSetup& setup) {
  Json j;
  j["epsilon"] = res.epsilon.str();
  j["domain"] = setup.image.has_value() ? "valuation_image" : "lattice";
  if (setup.image.has_value()) {
    Json basis = Json::array();
    for (const Int& p : setup.image->basis.primes) basis.push_back(p.get_str());
    j["basis"] = std::move(basis);
  }
  j["source_size"] = res.source_size;
  j["query_budget"] = res.query_budget;
  j["source_binary_max"] = res.source_binary_max;
  if (res.sumset_size.has_value()) {
    j["sumset_size"] = res.sumset_size->get_str();
  }
  j["subset_size"] = res.subset.size();
  j["subset"] = addcomb::serialize_set(res.subset);
  return j;
}

int cmd_extract(const CommonOpts& opts) {
  const addcomb::RunConfig cfg = opts.config();
  const ExtractSetup setup = extract_domain(load_set(opts.input));
  const Eps eps = opts.eps_or(cfg);
  const addcomb::ExtractionResult res =
      addcomb::extract_structured_subset(setup.domain, eps, true, cfg.max_points);
  return finish(opts.out, extraction_json(res, setup), res.checks);
}

int cmd_query(const CommonOpts& opts, const std::string& element_text) {
  const addcomb::RunConfig cfg = opts.config();
  const ExtractSetup setup = extract_domain(load_set(opts.input));
  const Eps eps = opts.eps_or(cfg);
  const addcomb::ExtractionResult res =
      addcomb::extract_structured_subset(setup.domain, eps, true, cfg.max_points);

  // Resolve the element: coordinates for a lattice input, a plain integer
  // (re-expressed over the prime basis) for an integer input.
  std::vector<Int> coords;
  if (setup.image.has_value()) {
    if (element_text.find(',') != std::string::npos) {
      throw std::invalid_argument("query: integer input takes a single integer element");
    }
    Int e;
    try {
      e = Int(element_text);
    } catch (const std::exception&) {
      throw std::invalid_argument("query: bad element '" + element_text + "'");
    }
    if (e <= 0) throw std::invalid_argument("query: element must be positive");
    Int residual = e;
    for (const Int& p : setup.image->basis.primes) {
      const unsigned long v = valuation_of(residual, p);
      coords.emplace_back(v);
      Int reduced;
      mpz_remove(reduced.get_mpz_t(), residual.get_mpz_t(), p.get_mpz_t());
      residual = reduced;
    }
    if (residual != 1) {
      throw std::invalid_argument(
          "query: element does not factor over the input's prime basis");
    }
  } else {
    std::stringstream ss(element_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        coords.emplace_back(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("query: bad coordinate '" + tok + "'");
      }
    }
    if (static_cast<int>(coords.size()) != setup.domain.dimension()) {
      throw std::invalid_argument("query: element has wrong dimension");
    }
  }

  Json j = extraction_json(res, setup);
  j["element"] = element_text;

  addcomb::Ledger led;
  try {
    const addcomb::QueryTranscript qt = addcomb::run_query_protocol(res, coords);
    Json queries = Json::array();
    for (const auto& [coord, value] : qt.queries) {
      queries.push_back({{"coordinate", coord}, {"value", value.get_str()}});
    }
    j["queries"] = std::move(queries);
    Json ident = Json::array();
    for (const Int& v : qt.identified) ident.push_back(v.get_str());
    j["identified"] = std::move(ident);
    led.push_back(addcomb::make_check(
        "query count within budget",
        Rat(static_cast<unsigned long>(qt.queries.size())), "<=",
        Rat(static_cast<unsigned long>(res.query_budget))));
  } catch (const std::invalid_argument&) {
    // The element lies outside the extracted subset: an honest negative
    // outcome, reported as a failed check rather than a usage error.
    j["in_subset"] = false;
    led.push_back(addcomb::make_check("element lies in the extracted subset",
                                      Rat(0L), "==", Rat(1L)));
  }
  return finish(opts.out, std::move(j), led);
}

// ---------------------------------------------------------------------------

int cmd_verify_chang(const CommonOpts& opts, long long p_arg, unsigned long k_arg) {
  const addcomb::RunConfig cfg = opts.config();
  const std::string text = slurp(opts.input);

  addcomb::WeightedSet w;
  try {
    w = addcomb::parse_weighted_text(text);
  } catch (const std::invalid_argument&) {
    const addcomb::SetFile sf = addcomb::parse_set_text(text);
    if (sf.is_lattice()) {
      throw std::invalid_argument("verify chang: expected integers or element,weight lines");
    }
    w = addcomb::WeightedSet::unit(sf.ints());
  }

  addcomb::PAdicFamily fam;
  fam.p = addcomb::int_from(p_arg);
  fam.k = k_arg;
  std::map<long, std::map<Int, Rat>> split;
  for (const auto& [x, wt] : w.entries()) {
    if (x <= 0) throw std::invalid_argument("verify chang: frequencies must be positive");
    split[static_cast<long>(valuation_of(x, fam.p))][x] = wt;
  }
  for (const auto& [j, entries] : split) {
    fam.components.emplace(j, addcomb::WeightedSet(entries));
  }

  const addcomb::ChangCheckOutcome outcome =
      addcomb::chang_inequality_check(fam, cfg.max_points);
  addcomb::Ledger led;
  led.push_back(outcome.powered);
  if (fam.k <= 3 && fam.components.size() <= 4) {
    led.push_back(addcomb::orthogonality_witness(fam));
  }

  Json j;
  j["mode"] = "chang";
  j["p"] = fam.p.get_str();
  j["k"] = fam.k;
  j["components"] = fam.components.size();
  j["total_moment"] = rat_str(outcome.total_moment);
  j["linear_bound"] = rat_str(outcome.rhs_linear);
  j["root_brackets_exact"] = outcome.roots_exact;
  j["bracket_digits"] = outcome.digits;
  return finish(opts.out, std::move(j), led);
}

int cmd_verify_lemma52(const CommonOpts& opts, unsigned long k_arg) {
  const addcomb::RunConfig cfg = opts.config();
  const addcomb::SetFile sf = load_set(opts.input);
  if (sf.is_lattice()) {
    throw std::invalid_argument("verify lemma52: expected an integer set");
  }
  const addcomb::LambdaCertificate cert =
      addcomb::lambda_certificate(sf.ints(), k_arg, cfg.max_points);
  Json j;
  j["mode"] = "lemma52";
  j["k"] = cert.k;
  j["query_bound"] = cert.query_bound;
  j["moment_bound"] = cert.bound.get_str();
  addcomb::Ledger led{cert.energy_check};
  return finish(opts.out, std::move(j), led);
}

int cmd_verify_cover(const CommonOpts& opts, unsigned long k_arg) {
  const addcomb::RunConfig cfg = opts.config();
  const addcomb::SetFile sf = load_set(opts.input);
  if (sf.is_lattice()) {
    throw std::invalid_argument("verify cover: expected an integer set");
  }
  const Eps eps = opts.eps_or(cfg);
  const addcomb::DecompositionCertificate cert =
      addcomb::cover_decomposition(sf.ints(), eps, k_arg, cfg.max_points);
  Json j;
  j["mode"] = "cover";
  j["epsilon"] = cert.epsilon.str();
  j["k"] = cert.k;
  j["pieces"] = cert.pieces.size();
  std::size_t rounds = 0;
  for (const auto& piece : cert.pieces) rounds = std::max(rounds, piece.round + 1);
  j["rounds"] = rounds;
  j["binary_proxy"] = cert.binary_proxy.get_str();
  j["aggregate_bound"] = cert.aggregate.get_str();
  return finish(opts.out, std::move(j), cert.checks);
}

int cmd_verify_sumproduct(const CommonOpts& opts) {
  const addcomb::RunConfig cfg = opts.config();
  const addcomb::SetFile sf = load_set(opts.input);
  if (sf.is_lattice()) {
    throw std::invalid_argument("verify sumproduct: expected an integer set");
  }
  const addcomb::SumProductReport rep =
      addcomb::sum_product_report(sf.ints(), cfg.k_list, {2, 3}, cfg.max_points);
  Json j;
  j["mode"] = "sumproduct";
  j["size"] = rep.input.size();
  j["b_star"] = rep.b_star.get_str();
  Json ksums = Json::object();
  for (const auto& [k, v] : rep.ksum_sizes) ksums[std::to_string(k)] = v.get_str();
  j["ksum_sizes"] = std::move(ksums);
  Json prods = Json::object();
  for (const auto& [t, v] : rep.product_sizes) prods[std::to_string(t)] = v.get_str();
  j["iterated_product_sizes"] = std::move(prods);
  return finish(opts.out, std::move(j), rep.ledger);
}

int cmd_report(const CommonOpts& opts, const std::string& table_path,
               const std::string& items_csv) {
  addcomb::RunConfig cfg = opts.config();
  if (!opts.out.empty()) cfg.out_json = opts.out;
  if (!table_path.empty()) cfg.out_table = table_path;
  if (!items_csv.empty()) {
    cfg.items.clear();
    std::stringstream ss(items_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) cfg.items.push_back(tok);
    }
  }
  const addcomb::SuiteReport rep = addcomb::run_suite(cfg);
  std::cout << addcomb::report_to_table(rep);
  return addcomb::emit_report(rep);
}

void add_common(CLI::App* sub, CommonOpts& opts, bool with_input, bool with_eps) {
  sub->add_option("--config", opts.config_path, "key=value run configuration file");
  sub->add_option("--out", opts.out, "output file (default: stdout)");
  auto* seed = sub->add_option("--seed", opts.seed, "random seed override");
  seed->each([&opts](const std::string&) { opts.seed_set = true; });
  if (with_input) {
    sub->add_option("--input", opts.input, "set file to read")->required();
  }
  if (with_eps) {
    sub->add_option("--epsilon", opts.epsilon, "query-budget fraction p/q in (0, 1]");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for additive structure certificates"};
  app.require_subcommand(1);

  int rc = 2;

  // generate
  auto g_opts = std::make_shared<CommonOpts>();
  auto g_spec = std::make_shared<std::string>();
  CLI::App* gen = app.add_subcommand("generate", "emit a set file from a generator spec");
  add_common(gen, *g_opts, false, false);
  gen->add_option("--spec", *g_spec,
                  "generator spec, kind:key=value,... (kinds: ap, gp, cube, "
                  "random_lattice, random_int, smooth_box, dilate_union)")
      ->required();
  gen->callback([&rc, g_opts, g_spec] { rc = cmd_generate(*g_opts, *g_spec); });

  // analyze
  auto a_opts = std::make_shared<CommonOpts>();
  CLI::App* ana = app.add_subcommand("analyze", "doubling and tree statistics for a set file");
  add_common(ana, *a_opts, true, false);
  ana->callback([&rc, a_opts] { rc = cmd_analyze(*a_opts); });

  // extract
  auto e_opts = std::make_shared<CommonOpts>();
  CLI::App* ext = app.add_subcommand("extract", "extract a low-query structured subset");
  add_common(ext, *e_opts, true, true);
  ext->callback([&rc, e_opts] { rc = cmd_extract(*e_opts); });

  // query
  auto q_opts = std::make_shared<CommonOpts>();
  auto q_elem = std::make_shared<std::string>();
  CLI::App* qry = app.add_subcommand("query", "replay the probing protocol for one element");
  add_common(qry, *q_opts, true, true);
  qry->add_option("--element", *q_elem,
                  "element to identify: comma-separated coordinates, or a plain "
                  "integer for integer-set inputs")
      ->required();
  qry->callback([&rc, q_opts, q_elem] { rc = cmd_query(*q_opts, *q_elem); });

  // verify
  CLI::App* ver = app.add_subcommand("verify", "run a certificate family end to end");
  ver->require_subcommand(1);

  auto vc_opts = std::make_shared<CommonOpts>();
  auto vc_p = std::make_shared<long long>(2);
  auto vc_k = std::make_shared<unsigned long>(2);
  CLI::App* vch = ver->add_subcommand("chang", "valuation-split moment inequality");
  add_common(vch, *vc_opts, true, false);
  vch->add_option("--p", *vc_p, "prime to split valuations by")->check(CLI::PositiveNumber);
  vch->add_option("--k", *vc_k, "moment order")->check(CLI::Range(1ul, 8ul));
  vch->callback([&rc, vc_opts, vc_p, vc_k] { rc = cmd_verify_chang(*vc_opts, *vc_p, *vc_k); });

  auto vl_opts = std::make_shared<CommonOpts>();
  auto vl_k = std::make_shared<unsigned long>(2);
  CLI::App* vle = ver->add_subcommand("lemma52", "moment bound certificate from query depth");
  add_common(vle, *vl_opts, true, false);
  vle->add_option("--k", *vl_k, "moment order")->check(CLI::Range(1ul, 8ul));
  vle->callback([&rc, vl_opts, vl_k] { rc = cmd_verify_lemma52(*vl_opts, *vl_k); });

  auto vv_opts = std::make_shared<CommonOpts>();
  auto vv_k = std::make_shared<unsigned long>(2);
  CLI::App* vco = ver->add_subcommand("cover", "low-query cover decomposition");
  add_common(vco, *vv_opts, true, true);
  vco->add_option("--k", *vv_k, "moment order")->check(CLI::Range(1ul, 8ul));
  vco->callback([&rc, vv_opts, vv_k] { rc = cmd_verify_cover(*vv_opts, *vv_k); });

  auto vs_opts = std::make_shared<CommonOpts>();
  CLI::App* vsp = ver->add_subcommand("sumproduct", "joint sums-and-products audit");
  add_common(vsp, *vs_opts, true, false);
  vsp->callback([&rc, vs_opts] { rc = cmd_verify_sumproduct(*vs_opts); });

  // report
  auto r_opts = std::make_shared<CommonOpts>();
  auto r_table = std::make_shared<std::string>();
  auto r_items = std::make_shared<std::string>();
  CLI::App* rep = app.add_subcommand("report", "run the acceptance suite and emit reports");
  add_common(rep, *r_opts, false, false);
  rep->add_option("--table", *r_table, "also write the human-readable table here");
  rep->add_option("--items", *r_items, "comma-separated subset of suite items");
  rep->callback([&rc, r_opts, r_table, r_items] {
    rc = cmd_report(*r_opts, *r_table, *r_items);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
