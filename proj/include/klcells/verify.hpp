#pragma once

#include <string>
#include <vector>

#include "klcells/permutation.hpp"
#include "klcells/report.hpp"

namespace klcells {

/// Left cells from the mu graph against recording-tableau fibres.
Report verify_theorem_a(int n, int max_degree = kDefaultMaxDegree);
/// Knuth classes against insertion-tableau fibres.
Report verify_knuth_classes(int n, int max_degree = kDefaultMaxDegree);
/// transpose(evacuation(Q(w))) == Q(w w0).
Report verify_evacuation(int n, int max_degree = kDefaultMaxDegree);
/// C'_w is bar invariant and, written over v^{-l(y)} T_y, has v-degree at
/// most -1 off the diagonal.
Report verify_bar_invariance(int n, int max_degree = kDefaultMaxDegree);
/// P(0) = 1, the degree bound, and P_{y,w} = P_{y^-1,w^-1} on every pair.
Report verify_kl_properties(int n, int max_degree = kDefaultMaxDegree);
/// RS is a bijection onto pairs of standard tableaux of equal shape, the
/// inverse map undoes it, and Q(w) = P(w^-1).
Report verify_rs(int n, int max_degree = kDefaultMaxDegree);

struct SuiteOptions {
  int max_degree = kDefaultMaxDegree;
  /// Admit the runs that take minutes rather than seconds.
  bool long_run = false;
};

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();
/// Smallest n for which `suite` needs SuiteOptions::long_run (0 if never).
int long_run_threshold(const std::string& suite);
/// Throws InputError for an unknown suite and BoundError when n is too large
/// or needs long_run.
Report run_suite(const std::string& suite, int n, const SuiteOptions& options = {});

}  // namespace klcells
