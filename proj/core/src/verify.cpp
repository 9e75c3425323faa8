#include "nestfock/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "nestfock/basis_change.hpp"
#include "nestfock/errors.hpp"
#include "nestfock/ring.hpp"
#include "nestfock/symfunc.hpp"

namespace nestfock {

namespace {

class Checker {
 public:
  Checker(std::string suite, std::string name) {
    r_.suite = std::move(suite);
    r_.name = std::move(name);
  }

  // Records one case; the counterexample is built only for the first failure.
  template <class F>
  bool expect(bool ok, F&& counterexample) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.counterexample = counterexample();
    }
    return ok;
  }

  // Runs body, turning a thrown library error into a failed case.
  template <class F>
  void guard(F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return Json{{"exception", e.what()}}; });
    }
  }

  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

Scalar sign_pow(int e) { return Scalar(e % 2 == 0 ? 1 : -1); }

std::vector<B2Key> b2_keys_upto(int n) {
  std::vector<B2Key> out;
  for (int d = 0; d <= n; ++d) {
    for (auto& k : b2_keys(d)) out.push_back(std::move(k));
  }
  return out;
}

std::vector<int> nonzero_range(int p) {
  std::vector<int> out;
  for (int x = -p; x <= p; ++x) {
    if (x != 0) out.push_back(x);
  }
  return out;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

HilbFixedVector fixed_class(const Partition& lambda) { return HilbFixedVector(HilbFixedKey{lambda}); }

Json matrix_diff(const RatMatrix& got, const RatMatrix& want) {
  for (std::size_t r = 0; r < got.rows(); ++r) {
    for (std::size_t c = 0; c < got.cols(); ++c) {
      if (got(r, c) != want(r, c)) {
        return Json{{"row", r}, {"col", c}, {"got", to_fraction_string(got(r, c))},
                    {"want", to_fraction_string(want(r, c))}};
      }
    }
  }
  return Json{{"shape", {got.rows(), got.cols(), want.rows(), want.cols()}}};
}

bool same_matrix(const RatMatrix& a, const RatMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

// ã_p in the fixed-point basis from degree d, zero maps where a degree is
// negative.
class B1Ops {
 public:
  const RatMatrix& heis(int p, int d) {
    auto key = std::make_pair(p, d);
    auto it = heis_.find(key);
    if (it != heis_.end()) return it->second;
    RatMatrix m = (d < 0 || d - p < 0) ? RatMatrix(dim(d), dim(d - p)) : b1_heisenberg(p, d);
    return heis_.emplace(key, std::move(m)).first->second;
  }
  const RatMatrix& up(int d) {
    auto it = up_.find(d);
    if (it != up_.end()) return it->second;
    RatMatrix m = d < 0 ? RatMatrix(0, dim(d + 1)) : b1_translation(d);
    return up_.emplace(d, std::move(m)).first->second;
  }
  const RatMatrix& down(int d) {
    auto it = down_.find(d);
    if (it != down_.end()) return it->second;
    RatMatrix m = d < 1 ? RatMatrix(dim(d), 0) : b1_cotranslation(d);
    return down_.emplace(d, std::move(m)).first->second;
  }
  static std::size_t dim(int d) { return d < 0 ? 0 : enumerate_incidence_pairs(d).size(); }

 private:
  std::map<std::pair<int, int>, RatMatrix> heis_;
  std::map<int, RatMatrix> up_;
  std::map<int, RatMatrix> down_;
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hooks",     "euler", "heisenberg", "loop",     "pairing",
                                                 "roundtrip", "phi",   "diagrams",   "ordinary"};
  return names;
}

bool is_suite_name(std::string_view name) {
  if (name == "all") return true;
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

CheckResult check_hook_identities(int max_n) {
  Checker ck("hooks", "hook_identities");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        Integer h = hook_product(lambda);
        Scalar s = 0;
        for (const auto& c : canonical_generators(lambda)) {
          s += Scalar(h * h) / Scalar(h_pair(IncidencePair{lambda, add_cell(lambda, c.cell)}));
        }
        ck.expect(s == 1, [&] { return Json{{"lambda", to_json(lambda)}, {"sum", to_fraction_string(s)}}; });
      }
    }
    for (int n = 1; n <= max_n + 1; ++n) {
      for (const auto& mu : enumerate_partitions(n)) {
        Integer h = hook_product(mu);
        Scalar s = 0;
        for (int i : std::set<int>(mu.parts().begin(), mu.parts().end())) {
          s += Scalar(h * h) / Scalar(h_pair(IncidencePair{derive_lambda(mu, i), mu}));
        }
        ck.expect(s == n, [&] { return Json{{"mu", to_json(mu)}, {"sum", to_fraction_string(s)}}; });
      }
    }
  });
  return ck.done();
}

CheckResult check_euler_oracle(int max_n) {
  Checker ck("euler", "weight_oracle");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& p : enumerate_incidence_pairs(n)) {
        WeightMultiset w = tangent_weights_incidence(p);
        Integer prod = 1, pos = 1;
        for (auto x : w) {
          prod *= static_cast<long>(x);
          if (x > 0) pos *= static_cast<long>(x);
        }
        EulerClass e = euler_class(p);
        bool ok = w.size() == static_cast<std::size_t>(2 * (n + 1)) && prod == e.sign * e.magnitude &&
                  e.magnitude == h_pair(p) && e.t_exponent == 2 * (n + 1) && pos == h_plus(p);
        ck.expect(ok, [&] {
          return Json{{"pair", to_json(p)},      {"weights", w},
                      {"product", prod.get_str()}, {"positive_product", pos.get_str()},
                      {"h_pair", h_pair(p).get_str()}, {"h_plus", h_plus(p).get_str()}};
        });
      }
    }
  });
  return ck.done();
}

CheckResult check_betti(int max_n) {
  Checker ck("euler", "betti_agreement");
  ck.guard([&] {
    auto series = betti_series(max_n);
    for (int n = 0; n <= max_n; ++n) {
      auto fixed = betti_from_fixed_points(n);
      std::int64_t total = 0;
      for (auto b : fixed) total += b;
      auto pairs = static_cast<std::int64_t>(enumerate_incidence_pairs(n).size());
      auto keys = static_cast<std::int64_t>(b2_keys(n).size());
      ck.expect(series[static_cast<std::size_t>(n)] == fixed && total == pairs && pairs == keys, [&] {
        return Json{{"n", n}, {"series", series[static_cast<std::size_t>(n)]}, {"fixed_points", fixed},
                    {"pairs", pairs}, {"b2_keys", keys}};
      });
    }
  });
  return ck.done();
}

CheckResult check_heisenberg_b2(int max_n, int max_index) {
  Checker ck("heisenberg", "heisenberg_b2");
  ck.guard([&] {
    for (const auto& key : b2_keys_upto(max_n)) {
      B2Vector v(key);
      for (int p : nonzero_range(max_index)) {
        for (int q : nonzero_range(max_index)) {
          B2Vector lhs = loop_action(0, p, loop_action(0, q, v)) - loop_action(0, q, loop_action(0, p, v));
          B2Vector rhs = p == -q ? Scalar(p) * v : B2Vector{};
          ck.expect(lhs == rhs, [&] { return Json{{"key", to_json(key)}, {"p", p}, {"q", q}, {"got", to_json(lhs)}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_heisenberg_b1(int max_source, int max_degree, int max_index) {
  Checker ck("heisenberg", "heisenberg_b1");
  ck.guard([&] {
    B1Ops ops;
    for (int d = 0; d <= max_source; ++d) {
      for (int p : nonzero_range(max_index)) {
        for (int q : nonzero_range(max_index)) {
          if (std::max({d - q, d - p, d - p - q}) > max_degree) continue;
          // Row vectors: ã_p ã_q applies ã_q first.
          RatMatrix pq = ops.heis(q, d) * ops.heis(p, d - q);
          RatMatrix qp = ops.heis(p, d) * ops.heis(q, d - p);
          RatMatrix comm = pq - qp;
          RatMatrix want = p == -q ? Scalar(p) * RatMatrix::identity(B1Ops::dim(d)) : RatMatrix(comm.rows(), comm.cols());
          ck.expect(same_matrix(comm, want),
                    [&] { return Json{{"degree", d}, {"p", p}, {"q", q}, {"diff", matrix_diff(comm, want)}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_translation_b1(int max_source, int max_degree, int max_index) {
  Checker ck("heisenberg", "translation_b1");
  ck.guard([&] {
    B1Ops ops;
    for (int d = 0; d <= max_source && d + 1 <= max_degree; ++d) {
      RatMatrix tt = ops.up(d) * ops.down(d + 1);
      ck.expect(tt.is_identity(), [&] { return Json{{"degree", d}, {"identity", "cotranslate after translate"}}; });
      for (int p : nonzero_range(max_index)) {
        if (d + 1 - p > max_degree) continue;
        RatMatrix a = ops.up(d) * ops.heis(p, d + 1);
        RatMatrix b = ops.heis(p, d) * ops.up(d - p);
        ck.expect(same_matrix(a, b), [&] { return Json{{"degree", d}, {"p", p}, {"commutator", "translate"}}; });
        RatMatrix c = ops.down(d) * ops.heis(p, d - 1);
        RatMatrix e = ops.heis(p, d) * ops.down(d - p);
        ck.expect(same_matrix(c, e), [&] { return Json{{"degree", d}, {"p", p}, {"commutator", "cotranslate"}}; });
      }
    }
  });
  return ck.done();
}

CheckResult check_loop_b2(int max_n, int max_j, int max_index) {
  Checker ck("loop", "loop_relations");
  ck.guard([&] {
    for (const auto& key : b2_keys_upto(max_n)) {
      B2Vector v(key);
      B2Vector back = cotranslate(translate(v));
      ck.expect(back == v, [&] { return Json{{"key", to_json(key)}, {"identity", "cotranslate translate"}}; });
      B2Vector proj = key.i == 0 ? v : B2Vector{};
      ck.expect(translate(cotranslate(v)) == v - proj,
                [&] { return Json{{"key", to_json(key)}, {"identity", "translate cotranslate"}}; });
      for (int j1 = 0; j1 <= max_j; ++j1) {
        for (int j2 = 0; j2 <= max_j; ++j2) {
          for (int p : nonzero_range(max_index)) {
            for (int q : nonzero_range(max_index)) {
              B2Vector lhs = loop_action(j1, p, loop_action(j2, q, v)) - loop_action(j2, q, loop_action(j1, p, v));
              B2Vector rhs = p == -q ? translate(Scalar(p) * v, j1 + j2) : B2Vector{};
              ck.expect(lhs == rhs, [&] {
                return Json{{"key", to_json(key)}, {"j1", j1}, {"j2", j2}, {"p", p}, {"q", q}};
              });
            }
          }
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_adjointness_b2(int max_n, int max_index) {
  Checker ck("loop", "adjointness_b2");
  ck.guard([&] {
    for (int d = 0; d <= max_n; ++d) {
      for (const auto& a : b2_keys(d)) {
        for (int n = 1; n <= max_index && d + n <= max_n; ++n) {
          for (const auto& b : b2_keys(d + n)) {
            Scalar l = pair_b2(creation(n, B2Vector(a)), B2Vector(b));
            Scalar r = pair_b2(B2Vector(a), annihilation(n, B2Vector(b)));
            ck.expect(l == r, [&] { return Json{{"v", to_json(a)}, {"w", to_json(b)}, {"n", n}}; });
          }
        }
        if (d + 1 > max_n) continue;
        for (const auto& b : b2_keys(d + 1)) {
          Scalar l = pair_b2(translate(B2Vector(a)), B2Vector(b));
          Scalar r = pair_b2(B2Vector(a), cotranslate(B2Vector(b)));
          ck.expect(l == r, [&] { return Json{{"v", to_json(a)}, {"w", to_json(b)}, {"operator", "translate"}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_create_translate_commute(int max_source, int max_m, CreateRule rule) {
  Checker ck("loop", rule == CreateRule::corrected ? "create_translate_commute" : "create_translate_commute_literal");
  ck.guard([&] {
    for (int d = 0; d <= max_source; ++d) {
      for (const auto& p : enumerate_incidence_pairs(d)) {
        B3Vector v(B3Key{p});
        for (int m = 1; m <= max_m; ++m) {
          B3Vector a = translate_b3(create_b3(m, v, rule));
          B3Vector b = create_b3(m, translate_b3(v), rule);
          ck.expect(a == b, [&] {
            return Json{{"source", to_json(p)}, {"m", m}, {"target_degree", d + m + 1},
                        {"translate_after_create", to_json(a)}, {"create_after_translate", to_json(b)}};
          });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_pairing_transport(int max_n) {
  Checker ck("pairing", "pairing_transport");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      auto keys = b2_keys(n);
      std::vector<B1Vector> images;
      for (const auto& k : keys) images.push_back(b2_to_b1(B2Vector(k)));
      for (std::size_t a = 0; a < keys.size(); ++a) {
        for (std::size_t b = a; b < keys.size(); ++b) {
          Scalar want = pair_b2(B2Vector(keys[a]), B2Vector(keys[b]));
          Scalar got = pair_b1(images[a], images[b]);
          ck.expect(got == want, [&] {
            return Json{{"a", to_json(keys[a])}, {"b", to_json(keys[b])}, {"b1", to_fraction_string(got)},
                        {"b2", to_fraction_string(want)}};
          });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_triangularity(int max_n) {
  Checker ck("pairing", "b3_in_b1_triangular");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      auto pairs = enumerate_incidence_pairs(n);
      RatMatrix m = b3_in_b1(n).entries;
      RatMatrix g = gram_b3(n);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        ck.expect(m(p, p) == Scalar(1) / Scalar(h_plus(pairs[p])), [&] { return Json{{"diagonal", to_json(pairs[p])}}; });
        Scalar diag = 0;
        for (std::size_t q = 0; q < pairs.size(); ++q) {
          diag += m(p, q) * m(p, q) * Scalar(h_pair(pairs[q]));
          if (m(p, q) == 0) continue;
          bool below = dominance_le(pairs[q].lambda, pairs[p].lambda) && dominance_le(pairs[q].mu, pairs[p].mu);
          ck.expect(below, [&] { return Json{{"row", to_json(pairs[p])}, {"col", to_json(pairs[q])}}; });
        }
        ck.expect(diag == g(p, p), [&] { return Json{{"gram_diagonal", to_json(pairs[p])}}; });
      }
    }
  });
  return ck.done();
}

CheckResult check_roundtrip(int max_n) {
  Checker ck("roundtrip", "transition_roundtrip");
  ck.guard([&] {
    const Basis all[] = {Basis::b1, Basis::b2, Basis::b3};
    for (int n = 0; n <= max_n; ++n) {
      for (Basis a : all) {
        for (Basis b : all) {
          if (a == b) continue;
          RatMatrix prod = transition(a, b, n).entries * transition(b, a, n).entries;
          ck.expect(prod.is_identity(), [&] {
            return Json{{"n", n}, {"from", basis_name(a)}, {"to", basis_name(b)}};
          });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_common_part_choice(int max_n) {
  Checker ck("roundtrip", "common_part_choice");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& p : enumerate_incidence_pairs(n)) {
        B2Vector a = b3_in_b2(p, CommonPartRule::largest);
        B2Vector b = b3_in_b2(p, CommonPartRule::smallest);
        ck.expect(a == b, [&] { return Json{{"pair", to_json(p)}, {"largest", to_json(a)}, {"smallest", to_json(b)}}; });
      }
    }
  });
  return ck.done();
}

CheckResult check_phi_L(int max_n) {
  Checker ck("phi", "phi_L_is_monomial");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        SymFunc got = phi(hilb_L_in_p(lambda));
        SymFunc want = m_in_p(lambda);
        ck.expect(got == want, [&] {
          return Json{{"lambda", to_json(lambda)}, {"phi_L", symfunc_to_json(got)}, {"m", symfunc_to_json(want)}};
        });
      }
      // a_{-1}^n |0> through nakajima_L: [L^{(n)}] once, [L^{(1^n)}] n! times.
      if (n == 0) continue;
      HilbLVector v(HilbLKey{Partition{}});
      for (int j = 0; j < n; ++j) v = nakajima_L(1, v);
      Partition row{n};
      Partition col(std::vector<int>(static_cast<std::size_t>(n), 1));
      ck.expect(v.coeff(HilbLKey{row}) == 1 && v.coeff(HilbLKey{col}) == Scalar(factorial(n)),
                [&] { return Json{{"n", n}, {"expansion", to_json(v)}}; });
    }
  });
  return ck.done();
}

CheckResult check_phi_fixed(int max_n) {
  Checker ck("phi", "phi_fixed_is_schur");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      auto parts = enumerate_partitions(n);
      for (const auto& lambda : parts) {
        SymFunc img = phi(hilb_fixed_to_p(fixed_class(lambda)));
        Integer h = hook_product(lambda);
        SymFunc want = Scalar(h) * schur_in_p(lambda);
        ck.expect(img == want, [&] {
          return Json{{"lambda", to_json(lambda)}, {"phi", symfunc_to_json(img)}, {"h_schur", symfunc_to_json(want)}};
        });
        ck.expect(hall_pairing(img, img) == Scalar(h * h), [&] { return Json{{"norm", to_json(lambda)}}; });
        for (const auto& mu : parts) {
          Scalar hall = hall_pairing(SymFunc(lambda), SymFunc(mu));
          Scalar fock = pair_hilb_p(HilbPVector(HilbPKey{lambda}), HilbPVector(HilbPKey{mu}));
          ck.expect(hall == fock, [&] { return Json{{"hall", to_json(lambda)}, {"with", to_json(mu)}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_sigma_product(int max_n) {
  Checker ck("phi", "sigma_diagonal_product");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      auto parts = enumerate_partitions(n);
      std::vector<SymFunc> sigma;
      for (const auto& l : parts) {
        sigma.push_back(Scalar(1) / Scalar(hook_product(l)) * phi(hilb_fixed_to_p(fixed_class(l))));
      }
      for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = 0; b < parts.size(); ++b) {
          HilbFixedVector x = hilb_p_to_fixed(phi_inverse(sigma[a]));
          HilbFixedVector y = hilb_p_to_fixed(phi_inverse(sigma[b]));
          SymFunc got = phi(hilb_fixed_to_p(star_hilb(x, y, n)));
          SymFunc want = a == b ? sign_pow(n) * Scalar(hook_product(parts[a])) * sigma[a] : SymFunc{};
          ck.expect(got == want, [&] { return Json{{"lambda", to_json(parts[a])}, {"mu", to_json(parts[b])}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_induced_subring(int max_n) {
  Checker ck("phi", "induced_subring");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      auto parts = enumerate_partitions(n);
      for (const auto& a : parts) {
        PolyV x = phi_tilde(b1_to_b2(pullback_f(fixed_class(a))));
        for (const auto& b : parts) {
          PolyV y = phi_tilde(b1_to_b2(pullback_f(fixed_class(b))));
          PolyV got = induced_product(x, y);
          PolyV want = phi_tilde(b1_to_b2(pullback_f(star_hilb(fixed_class(a), fixed_class(b), n))));
          bool v_free = std::all_of(got.begin(), got.end(), [](const auto& kv) { return kv.first.v == 0; });
          ck.expect(got == want && v_free, [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"got", to_json(got)}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_diagram_creation_f(int max_n, int max_m) {
  Checker ck("diagrams", "f_intertwines_creation");
  ck.guard([&] {
    for (int m = 1; m <= max_m; ++m) {
      for (int n = 0; n + m <= max_n; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
          HilbFixedVector x = fixed_class(lambda);
          B2Vector lhs = b1_to_b2(pullback_f(hilb_p_to_fixed(hilb_creation(m, hilb_fixed_to_p(x)))));
          B2Vector rhs = creation(m, b1_to_b2(pullback_f(x)));
          ck.expect(lhs == rhs, [&] { return Json{{"lambda", to_json(lambda)}, {"m", m}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_diagram_annihilation_g(int max_n, int max_m) {
  Checker ck("diagrams", "g_intertwines_annihilation");
  ck.guard([&] {
    for (int m = 1; m <= max_m; ++m) {
      // g^* lands in degree n+m from Hilbert degree n+m+1.
      for (int n = 0; n + m <= max_n; ++n) {
        for (const auto& mu : enumerate_partitions(n + m + 1)) {
          HilbFixedVector x = fixed_class(mu);
          B2Vector lhs = b1_to_b2(pullback_g(hilb_p_to_fixed(hilb_annihilation(m, hilb_fixed_to_p(x)))));
          B2Vector rhs = annihilation(m, b1_to_b2(pullback_g(x)));
          ck.expect(lhs == rhs, [&] { return Json{{"mu", to_json(mu)}, {"m", m}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_diagram_creation_g(int max_n, int max_m) {
  Checker ck("diagrams", "g_creation_defect");
  ck.guard([&] {
    for (int m = 1; m <= max_m; ++m) {
      for (int n = 0; n + m <= max_n; ++n) {
        // A of Hilbert degree n+1; both sides in degree n+m.
        for (const auto& lambda : enumerate_partitions(n + 1)) {
          HilbFixedVector a = fixed_class(lambda);
          B2Vector lhs = b1_to_b2(pullback_g(hilb_p_to_fixed(hilb_creation(m, hilb_fixed_to_p(a)))));
          B2Vector rhs = creation(m, b1_to_b2(pullback_g(a)));
          rhs -= Scalar(m) * translate(b1_to_b2(pullback_f(a)), m - 1);
          ck.expect(lhs == rhs, [&] { return Json{{"lambda", to_json(lambda)}, {"m", m}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_vacuum_g(int max_m) {
  Checker ck("diagrams", "g_on_vacuum_creation");
  ck.guard([&] {
    for (int m = 1; m <= max_m; ++m) {
      HilbPVector am(HilbPKey{Partition{m}});
      B2Vector got = b1_to_b2(pullback_g(hilb_p_to_fixed(am)));
      B2Vector want = Scalar(m) * translate(vacuum(), m - 1);
      ck.expect(got == want, [&] { return Json{{"m", m}, {"got", to_json(got)}}; });
    }
  });
  return ck.done();
}

CheckResult check_phi_tilde_f(int max_n) {
  Checker ck("diagrams", "phi_tilde_f_equals_minus_phi");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        HilbFixedVector x = fixed_class(lambda);
        PolyV got = phi_tilde(b1_to_b2(pullback_f(x)));
        PolyV want;
        for (const auto& [k, c] : phi(hilb_fixed_to_p(x))) want.add(PolyVKey{k, 0}, -c);
        ck.expect(got == want, [&] { return Json{{"lambda", to_json(lambda)}, {"got", to_json(got)}}; });
      }
    }
  });
  return ck.done();
}

namespace {

// Fixed-point classes and power-sum classes of degree n, as fixed vectors.
std::vector<HilbFixedVector> hilb_test_vectors(int n) {
  std::vector<HilbFixedVector> out;
  for (const auto& l : enumerate_partitions(n)) {
    out.push_back(fixed_class(l));
    out.push_back(hilb_p_to_fixed(HilbPVector(HilbPKey{l})));
  }
  return out;
}

}  // namespace

CheckResult check_ring_homomorphisms(int max_n) {
  Checker ck("diagrams", "pullbacks_are_ring_maps");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      auto xs = hilb_test_vectors(n);
      for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = 0; b < xs.size(); ++b) {
          B1Vector lhs = pullback_f(star_hilb(xs[a], xs[b], n));
          B1Vector rhs = star_b1(pullback_f(xs[a]), pullback_f(xs[b]), n);
          ck.expect(lhs == rhs, [&] { return Json{{"map", "f"}, {"n", n}, {"a", a}, {"b", b}}; });
        }
      }
      auto ys = hilb_test_vectors(n + 1);
      for (std::size_t a = 0; a < ys.size(); ++a) {
        for (std::size_t b = 0; b < ys.size(); ++b) {
          B1Vector lhs = pullback_g(star_hilb(ys[a], ys[b], n + 1));
          B1Vector rhs = star_b1(pullback_g(ys[a]), pullback_g(ys[b]), n);
          ck.expect(lhs == rhs, [&] { return Json{{"map", "g"}, {"n", n}, {"a", a}, {"b", b}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_form_transport(int max_n) {
  Checker ck("diagrams", "bilinear_form_transport");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      auto xs = hilb_test_vectors(n);
      for (const auto& x : xs) {
        for (const auto& y : xs) {
          ck.expect(pair_b1(pullback_f(x), pullback_f(y)) == pair_hilb_fixed(x, y),
                    [&] { return Json{{"map", "f"}, {"n", n}}; });
        }
      }
      auto ys = hilb_test_vectors(n + 1);
      for (const auto& x : ys) {
        for (const auto& y : ys) {
          ck.expect(pair_b1(pullback_g(x), pullback_g(y)) == Scalar(n + 1) * pair_hilb_fixed(x, y),
                    [&] { return Json{{"map", "g"}, {"n", n}}; });
        }
      }
    }
  });
  return ck.done();
}

CheckResult check_ordinary_unit(int max_n) {
  Checker ck("ordinary", "unit");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      OrdinaryUnit u = ordinary_unit(n);
      ck.expect(u.u_n == Scalar(factorial(n)), [&] { return Json{{"n", n}, {"u_n", to_fraction_string(u.u_n)}}; });
    }
  });
  return ck.done();
}

CheckResult check_ordinary_ring(int max_n) {
  Checker ck("ordinary", "ring_axioms");
  ck.guard([&] {
    for (int n = 0; n <= max_n; ++n) {
      auto keys = b2_keys(n);
      const std::size_t N = keys.size();
      auto betti = betti_from_fixed_points(n);
      std::vector<std::int64_t> counted(betti.size(), 0);
      for (const auto& k : keys) ++counted[static_cast<std::size_t>(ordinary_degree(n, k) / 2)];
      ck.expect(counted == betti, [&] { return Json{{"n", n}, {"graded_dimensions", counted}, {"betti", betti}}; });

      std::vector<std::vector<B2Vector>> table(N, std::vector<B2Vector>(N));
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          table[a][b] = ordinary_cup(OrdinaryClass{n, B2Vector(keys[a])}, OrdinaryClass{n, B2Vector(keys[b])}).vec;
          const int deg = ordinary_degree(n, keys[a]) + ordinary_degree(n, keys[b]);
          bool graded = std::all_of(table[a][b].begin(), table[a][b].end(),
                                    [&](const auto& kv) { return ordinary_degree(n, kv.first) == deg; });
          // Nothing survives above the top degree 2n.
          bool vanishes = deg <= 2 * n || table[a][b].empty();
          ck.expect(graded && vanishes, [&] { return Json{{"n", n}, {"a", to_json(keys[a])}, {"b", to_json(keys[b])}}; });
        }
      }
      std::map<B2Key, std::size_t> idx;
      for (std::size_t j = 0; j < N; ++j) idx.emplace(keys[j], j);
      auto mul = [&](const B2Vector& x, std::size_t c, bool right) {
        B2Vector out;
        for (const auto& [k, v] : x) out.add(right ? table[idx.at(k)][c] : table[c][idx.at(k)], v);
        return out;
      };
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          ck.expect(table[a][b] == table[b][a],
                    [&] { return Json{{"n", n}, {"commutativity", {to_json(keys[a]), to_json(keys[b])}}}; });
          for (std::size_t c = 0; c < N; ++c) {
            B2Vector left = mul(table[a][b], c, true);
            B2Vector right = mul(table[b][c], a, false);
            ck.expect(left == right, [&] {
              return Json{{"n", n}, {"associativity", {to_json(keys[a]), to_json(keys[b]), to_json(keys[c])}}};
            });
          }
        }
      }
    }
  });
  return ck.done();
}

std::vector<CheckResult> run_suite(std::string_view suite, int max_n) {
  if (!is_suite_name(suite)) throw DomainError("unknown suite: " + std::string(suite));
  if (max_n < 0) throw DomainError("max degree must be nonnegative");
  std::vector<CheckResult> out;
  auto want = [&](std::string_view name) { return suite == "all" || suite == name; };
  if (want("hooks")) out.push_back(check_hook_identities(max_n));
  if (want("euler")) {
    out.push_back(check_euler_oracle(max_n));
    out.push_back(check_betti(max_n));
  }
  if (want("heisenberg")) {
    out.push_back(check_heisenberg_b2(max_n, 5));
    out.push_back(check_heisenberg_b1(max_n, max_n, 4));
    out.push_back(check_translation_b1(max_n, max_n, 4));
  }
  if (want("loop")) {
    out.push_back(check_loop_b2(max_n, 2, 3));
    out.push_back(check_adjointness_b2(max_n, 4));
    out.push_back(check_create_translate_commute(max_n, 3));
  }
  if (want("pairing")) {
    out.push_back(check_pairing_transport(max_n));
    out.push_back(check_triangularity(max_n));
  }
  if (want("roundtrip")) {
    out.push_back(check_roundtrip(max_n));
    out.push_back(check_common_part_choice(max_n));
  }
  if (want("phi")) {
    out.push_back(check_phi_L(max_n));
    out.push_back(check_phi_fixed(max_n));
    out.push_back(check_sigma_product(max_n));
    out.push_back(check_induced_subring(max_n));
  }
  if (want("diagrams")) {
    out.push_back(check_diagram_creation_f(max_n, 4));
    out.push_back(check_diagram_annihilation_g(max_n, 4));
    out.push_back(check_diagram_creation_g(max_n, 4));
    out.push_back(check_vacuum_g(std::max(1, max_n)));
    out.push_back(check_phi_tilde_f(max_n));
    out.push_back(check_ring_homomorphisms(max_n));
    out.push_back(check_form_transport(max_n));
  }
  if (want("ordinary")) {
    out.push_back(check_ordinary_unit(max_n));
    out.push_back(check_ordinary_ring(max_n));
  }
  return out;
}

Json to_json(const CheckResult& r) {
  Json j{{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"cases", r.cases}};
  if (!r.passed) j["counterexample"] = r.counterexample;
  return j;
}

}  // namespace nestfock
