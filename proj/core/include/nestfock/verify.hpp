#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nestfock/io.hpp"

namespace nestfock {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  // Number of individual identities evaluated.
  long cases = 0;
  // First failing case, null when passed.
  Json counterexample;
};

// Names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();
bool is_suite_name(std::string_view name);

// Runs one suite ("all" runs every suite) up to degree max_n. Each suite
// scales its own ranges from max_n; see the per-suite comments in verify.cpp.
std::vector<CheckResult> run_suite(std::string_view suite, int max_n);

// Individual checks, shared with the test programs.
CheckResult check_hook_identities(int max_n);
CheckResult check_euler_oracle(int max_n);
CheckResult check_betti(int max_n);
CheckResult check_heisenberg_b2(int max_n, int max_index);
// Source degrees <= max_source, every degree touched <= max_degree.
CheckResult check_heisenberg_b1(int max_source, int max_degree, int max_index);
CheckResult check_translation_b1(int max_source, int max_degree, int max_index);
CheckResult check_loop_b2(int max_n, int max_j, int max_index);
CheckResult check_adjointness_b2(int max_n, int max_index);
CheckResult check_create_translate_commute(int max_source, int max_m, CreateRule rule = CreateRule::corrected);
CheckResult check_pairing_transport(int max_n);
CheckResult check_triangularity(int max_n);
CheckResult check_roundtrip(int max_n);
CheckResult check_common_part_choice(int max_n);
CheckResult check_phi_L(int max_n);
CheckResult check_phi_fixed(int max_n);
CheckResult check_sigma_product(int max_n);
CheckResult check_induced_subring(int max_n);
CheckResult check_diagram_creation_f(int max_n, int max_m);
CheckResult check_diagram_annihilation_g(int max_n, int max_m);
CheckResult check_diagram_creation_g(int max_n, int max_m);
CheckResult check_vacuum_g(int max_m);
CheckResult check_phi_tilde_f(int max_n);
CheckResult check_ring_homomorphisms(int max_n);
CheckResult check_form_transport(int max_n);
CheckResult check_ordinary_unit(int max_n);
CheckResult check_ordinary_ring(int max_n);

Json to_json(const CheckResult& r);

}  // namespace nestfock
