#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>

#include "nestfock/basis_change.hpp"
#include "nestfock/cache.hpp"
#include "nestfock/errors.hpp"
#include "nestfock/io.hpp"
#include "nestfock/ring.hpp"
#include "nestfock/verify.hpp"

namespace nestfock::cli {

namespace {

struct Config {
  std::string format = "json";
  std::string cache_dir;
  int max_degree = 14;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

void check_degree(const Config& cfg, int n) {
  if (n < 0) throw UsageError("degree must be nonnegative");
  if (n > cfg.max_degree) {
    throw UsageError("degree " + std::to_string(n) + " exceeds --max-degree " + std::to_string(cfg.max_degree));
  }
}

Basis basis_arg(const std::string& s) {
  auto b = parse_basis(s);
  if (!b) throw UsageError("unknown basis '" + s + "' (expected b1, b2 or b3)");
  return *b;
}

Json parse_key_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError("cannot parse key '" + text + "': " + e.what());
  }
}

int cmd_transition(const Config& cfg, const std::string& from, const std::string& to, int n, std::ostream& out) {
  check_degree(cfg, n);
  Basis a = basis_arg(from);
  Basis b = basis_arg(to);
  TransitionMatrix m = MatrixCache(cfg.cache_dir).get(a, b, n);
  if (cfg.format == "csv") {
    out << to_csv(m);
  } else {
    emit(out, to_json(m));
  }
  return kOk;
}

// Products are always taken between basis keys of one space; `Keys`
// enumerates them and `mult` multiplies two keys.
template <class K>
struct ProductSpace {
  std::vector<K> keys;
  std::function<FockVector<K>(const K&, const K&)> mult;
  std::function<K(const Json&)> parse;
};

template <class K>
int run_product(const Config& cfg, const std::string& basis, int n, const ProductSpace<K>& space,
                const std::string& a_text, const std::string& b_text, std::ostream& out) {
  Json triples = Json::array();
  auto record = [&](const K& a, const K& b) {
    for (const auto& [c, coeff] : space.mult(a, b)) {
      triples.push_back(Json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}, {"coeff", to_fraction_string(coeff)}});
    }
  };
  if (!a_text.empty() || !b_text.empty()) {
    if (a_text.empty() || b_text.empty()) throw UsageError("--a and --b must be given together");
    K a = space.parse(parse_key_json(a_text));
    K b = space.parse(parse_key_json(b_text));
    record(a, b);
  } else {
    for (const auto& a : space.keys) {
      for (const auto& b : space.keys) record(a, b);
    }
  }
  if (cfg.format == "csv") {
    out << "a,b,c,coeff\n";
    for (const auto& t : triples) {
      auto cell = [](const Json& j) {
        std::string s = j.dump();
        std::string q = "\"";
        for (char ch : s) {
          if (ch == '"') q += '"';
          q += ch;
        }
        return q + "\"";
      };
      out << cell(t["a"]) << ',' << cell(t["b"]) << ',' << cell(t["c"]) << ',' << t["coeff"].get<std::string>() << '\n';
    }
  } else {
    emit(out, Json{{"degree", n}, {"basis", basis}, {"triples", std::move(triples)}});
  }
  return kOk;
}

void check_key_degree(int got, int n) {
  if (got != n) throw UsageError("key of degree " + std::to_string(got) + " given for degree " + std::to_string(n));
}

// Loads the b1/b2 transition pair through the disk cache and seeds the
// in-memory memo with it.
void prime_from_cache(const Config& cfg, int n) {
  MatrixCache cache(cfg.cache_dir);
  prime_transition(cache.get(Basis::b2, Basis::b1, n));
  prime_transition(cache.get(Basis::b1, Basis::b2, n));
}

int cmd_product(const Config& cfg, const std::string& basis, int n, const std::string& a_text, const std::string& b_text,
                std::ostream& out) {
  check_degree(cfg, n);
  auto parse_pair = [n](const Json& j) {
    try {
      IncidencePair p = pair_from_json(j);
      check_key_degree(p.degree(), n);
      return p;
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  };
  auto parse_b2 = [n](const Json& j) {
    try {
      B2Key k = b2key_from_json(j);
      check_key_degree(k.degree(), n);
      return k;
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  };
  if (basis == "b1") {
    ProductSpace<IncidencePair> s{enumerate_incidence_pairs(n),
                                  [n](const IncidencePair& a, const IncidencePair& b) {
                                    return star_b1(B1Vector(a), B1Vector(b), n);
                                  },
                                  parse_pair};
    return run_product(cfg, basis, n, s, a_text, b_text, out);
  }
  if (basis == "b2" || basis == "ordinary") {
    prime_from_cache(cfg, n);
    bool ordinary = basis == "ordinary";
    ProductSpace<B2Key> s{b2_keys(n),
                          [n, ordinary](const B2Key& a, const B2Key& b) {
                            if (ordinary) return ordinary_cup(OrdinaryClass{n, B2Vector(a)}, OrdinaryClass{n, B2Vector(b)}).vec;
                            return star_tilde(B2Vector(a), B2Vector(b));
                          },
                          parse_b2};
    return run_product(cfg, basis, n, s, a_text, b_text, out);
  }
  if (basis == "hilb") {
    std::vector<HilbFixedKey> keys;
    for (auto& l : enumerate_partitions(n)) keys.push_back(HilbFixedKey{std::move(l)});
    ProductSpace<HilbFixedKey> s{keys,
                                 [n](const HilbFixedKey& a, const HilbFixedKey& b) {
                                   return star_hilb(HilbFixedVector(a), HilbFixedVector(b), n);
                                 },
                                 [n](const Json& j) {
                                   try {
                                     Partition p = partition_from_json(j);
                                     check_key_degree(p.size(), n);
                                     return HilbFixedKey{p};
                                   } catch (const DomainError& e) {
                                     throw UsageError(e.what());
                                   }
                                 }};
    return run_product(cfg, basis, n, s, a_text, b_text, out);
  }
  throw UsageError("unknown product basis '" + basis + "' (expected b1, b2, ordinary or hilb)");
}

int cmd_betti(const Config& cfg, int max_n, std::ostream& out) {
  check_degree(cfg, max_n);
  auto table = betti_series(max_n);
  if (cfg.format == "csv") {
    out << "n,b\n";
    for (std::size_t n = 0; n < table.size(); ++n) {
      out << n;
      for (auto b : table[n]) out << ',' << b;
      out << '\n';
    }
  } else {
    emit(out, Json(table));
  }
  return kOk;
}

int cmd_pairs(const Config& cfg, int n, std::ostream& out) {
  check_degree(cfg, n);
  Json rows = Json::array();
  for (const auto& p : enumerate_incidence_pairs(n)) {
    MarkedCells mc = marked_cells(p);
    Json sq = Json::array();
    Json sqp = Json::array();
    for (int j = 0; j <= mc.m; ++j) {
      if (j == mc.k) continue;
      sq.push_back(to_json(mc.sq[static_cast<std::size_t>(j)]));
      sqp.push_back(to_json(mc.sqp[static_cast<std::size_t>(j)]));
    }
    rows.push_back(Json{{"lambda", to_json(p.lambda)},
                        {"mu", to_json(p.mu)},
                        {"i", p.distinguished()},
                        {"k", mc.k},
                        {"marked", sq},
                        {"marked_prime", sqp},
                        {"h_pair", integer_json(h_pair(p))},
                        {"h_plus", integer_json(h_plus(p))},
                        {"euler", to_json(euler_class(p))},
                        {"weights", tangent_weights_incidence(p)}});
  }
  if (cfg.format == "csv") {
    out << "lambda,mu,i,k,h_pair,h_plus\n";
    for (const auto& r : rows) {
      out << '"' << r["lambda"].dump() << "\",\"" << r["mu"].dump() << "\"," << r["i"] << ',' << r["k"] << ','
          << r["h_pair"] << ',' << r["h_plus"] << '\n';
    }
  } else {
    emit(out, Json{{"degree", n}, {"pairs", std::move(rows)}});
  }
  return kOk;
}

int cmd_verify(const Config& cfg, const std::string& suite, int max_n, std::ostream& out) {
  if (!is_suite_name(suite)) throw UsageError("unknown suite '" + suite + "'");
  check_degree(cfg, max_n);
  auto results = run_suite(suite, max_n);
  bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (cfg.format == "csv") {
    out << "suite,check,passed,cases\n";
    for (const auto& r : results) out << r.suite << ',' << r.name << ',' << (r.passed ? "pass" : "FAIL") << ',' << r.cases << '\n';
  } else {
    Json checks = Json::array();
    for (const auto& r : results) checks.push_back(to_json(r));
    emit(out, Json{{"suite", suite}, {"max_n", max_n}, {"passed", all}, {"checks", std::move(checks)}});
  }
  return all ? kOk : kCheckFailed;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("NESTFOCK_CACHE_DIR"); env && *env) return env;
  return ".nestfock-cache";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the incidence Hilbert schemes of the plane."};
  app.name(args.empty() ? "nestfock" : args[0]);
  app.require_subcommand(1);

  Config cfg;
  cfg.cache_dir = default_cache_dir();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached transition matrices (env NESTFOCK_CACHE_DIR)");
  app.add_option("--max-degree", cfg.max_degree, "Largest degree any command may touch")->check(CLI::NonNegativeNumber);

  std::string from, to, basis, a_text, b_text, suite = "all";
  int degree = 0;
  int max_n = 0;
  std::function<int()> action;

  auto* t = app.add_subcommand("transition", "Transition matrix between two bases of one degree");
  t->add_option("--from", from, "Source basis (b1, b2, b3)")->required();
  t->add_option("--to", to, "Target basis (b1, b2, b3)")->required();
  t->add_option("-n,--degree", degree, "Degree")->required();
  t->callback([&] { action = [&] { return cmd_transition(cfg, from, to, degree, out); }; });

  auto* p = app.add_subcommand("product", "Structure constants of a product");
  p->add_option("--basis", basis, "b1, b2, ordinary or hilb")->required();
  p->add_option("-n,--degree", degree, "Degree")->required();
  p->add_option("--a", a_text, "First factor as a JSON key");
  p->add_option("--b", b_text, "Second factor as a JSON key");
  p->callback([&] { action = [&] { return cmd_product(cfg, basis, degree, a_text, b_text, out); }; });

  auto* b = app.add_subcommand("betti", "Betti numbers for n = 0..max-n");
  b->add_option("--max-n", max_n, "Largest n")->required();
  b->callback([&] { action = [&] { return cmd_betti(cfg, max_n, out); }; });

  auto* pr = app.add_subcommand("pairs", "Incidence pairs of one degree with their hook data");
  pr->add_option("-n,--degree", degree, "Degree")->required();
  pr->callback([&] { action = [&] { return cmd_pairs(cfg, degree, out); }; });

  auto* v = app.add_subcommand("verify", "Run identity checks; exit 1 if any fails");
  v->add_option("--suite", suite, "hooks, euler, heisenberg, loop, pairing, roundtrip, phi, diagrams, ordinary, all");
  v->add_option("--max-n", max_n, "Largest degree")->required();
  v->callback([&] { action = [&] { return cmd_verify(cfg, suite, max_n, out); }; });

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace nestfock::cli
