#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sucfix/bijection.hpp"
#include "sucfix/enumeration.hpp"
#include "sucfix/permutation.hpp"
#include "sucfix/stats.hpp"
#include "sucfix/verify.hpp"

namespace py = pybind11;

namespace {

sucfix::Permutation to_perm(std::vector<int> values) {
  return sucfix::Permutation(std::move(values));
}

py::dict trace_to_dict(const sucfix::PipelineTrace& trace) {
  py::dict out;
  out["sigma"] = trace.sigma.values();
  out["sigma_bar"] = trace.sigma_bar.values();
  out["sigma_hat"] = trace.sigma_hat.values();
  out["cycle_form"] = trace.cycle_form.cycles;
  out["tau_bar"] = trace.tau_bar.values();
  out["tau_bar_inv"] = trace.tau_bar_inv.values();
  out["tau"] = trace.tau.values();
  return out;
}

py::dict report_to_dict(const sucfix::VerificationReport& report) {
  py::dict out;
  out["verifier"] = report.verifier;
  out["n"] = report.n;
  out["checks_run"] = report.checks_run;
  py::dict passed;
  for (const std::string& check : report.checks_run)
    passed[check.c_str()] = report.passed.at(check);
  out["passed"] = passed;
  if (report.counterexample) {
    py::dict witness;
    witness["check"] = report.counterexample->check;
    if (report.counterexample->sigma)
      witness["sigma"] = report.counterexample->sigma->values();
    else
      witness["sigma"] = py::none();
    witness["expected"] = report.counterexample->expected;
    witness["actual"] = report.counterexample->actual;
    out["counterexample"] = witness;
  } else {
    out["counterexample"] = py::none();
  }
  out["permutations_examined"] = report.permutations_examined;
  out["elapsed_seconds"] = report.elapsed_seconds;
  out["all_passed"] = report.all_passed();
  return out;
}

py::tuple set_to_tuple(const std::vector<int>& set) {
  py::tuple key(set.size());
  for (size_t i = 0; i < set.size(); ++i)
    key[i] = set[i];
  return key;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "permutation bijection, set-valued statistics and exhaustive verifiers";

  m.def(
      "phi", [](std::vector<int> sigma) { return sucfix::phi(to_perm(std::move(sigma))).values(); },
      py::arg("sigma"), "Map sigma through the bijection.");
  m.def(
      "phi_inverse",
      [](std::vector<int> tau) { return sucfix::phi_inverse(to_perm(std::move(tau))).values(); },
      py::arg("tau"), "Map tau through the inverse bijection.");
  m.def(
      "phi_trace",
      [](std::vector<int> sigma) {
        return trace_to_dict(sucfix::phi_with_trace(to_perm(std::move(sigma))));
      },
      py::arg("sigma"), "All pipeline stages as a dict keyed by stage name.");

  m.def(
      "suc", [](std::vector<int> p) { return sucfix::successions(to_perm(std::move(p))); },
      py::arg("perm"));
  m.def(
      "fix_bar", [](std::vector<int> p) { return sucfix::fixed_points_bar(to_perm(std::move(p))); },
      py::arg("perm"));
  m.def(
      "naj_suc",
      [](std::vector<int> p) { return sucfix::non_adjacent_successions(to_perm(std::move(p))); },
      py::arg("perm"));
  m.def(
      "pred", [](std::vector<int> p) { return sucfix::predecessors(to_perm(std::move(p))); },
      py::arg("perm"));
  m.def(
      "drop_bar", [](std::vector<int> p) { return sucfix::drop_values_bar(to_perm(std::move(p))); },
      py::arg("perm"));
  m.def(
      "exc_bar",
      [](std::vector<int> p) { return sucfix::excedance_values_bar(to_perm(std::move(p))); },
      py::arg("perm"));
  m.def(
      "stats",
      [](std::vector<int> p) {
        const sucfix::Permutation perm = to_perm(std::move(p));
        py::dict out;
        for (sucfix::Statistic statistic : sucfix::kAllStatistics)
          out[sucfix::statistic_name(statistic)] = sucfix::compute_statistic(statistic, perm);
        return out;
      },
      py::arg("perm"), "All six statistics as a dict of sorted lists.");

  m.def(
      "canonical_cycle_form",
      [](std::vector<int> p) {
        return sucfix::canonical_cycle_form(to_perm(std::move(p))).cycles;
      },
      py::arg("perm"));
  m.def(
      "flatten",
      [](std::vector<std::vector<int>> cycles) {
        return sucfix::flatten(sucfix::CanonicalCycleForm{std::move(cycles)}).values();
      },
      py::arg("cycles"));
  m.def(
      "unflatten",
      [](std::vector<int> word) { return sucfix::unflatten(to_perm(std::move(word))).cycles; },
      py::arg("word"));

  py::class_<sucfix::PermutationStream>(m, "PermutationStream",
                                        "Lexicographic stream over S_n, iterable.")
      .def(py::init<int>(), py::arg("n"))
      .def("__iter__", [](sucfix::PermutationStream& s) -> sucfix::PermutationStream& { return s; })
      .def("__next__", [](sucfix::PermutationStream& s) {
        const auto next = s.next();
        if (!next)
          throw py::stop_iteration();
        return next->values();
      });
  m.def(
      "enumerate_permutations", [](int n) { return sucfix::PermutationStream(n); }, py::arg("n"),
      "Iterate S_n in lexicographic order.");

  m.def(
      "distribution_table",
      [](int n, const std::string& statistic) {
        const sucfix::DistributionTable table =
            sucfix::distribution_table(n, sucfix::statistic_from_name(statistic));
        py::dict out;
        for (const auto& [mask, count] : table.counts)
          out[set_to_tuple(sucfix::mask_to_set(mask))] = count;
        return out;
      },
      py::arg("n"), py::arg("statistic"),
      "Counts over S_n keyed by the statistic's subset, as a dict of tuples.");

  m.def(
      "verify",
      [](int n, const std::string& check, int jobs) {
        std::vector<sucfix::VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = sucfix::run_verifiers(n, check, jobs);
        }
        py::list out;
        for (const sucfix::VerificationReport& report : reports)
          out.append(report_to_dict(report));
        return out;
      },
      py::arg("n"), py::arg("check") = "all", py::arg("jobs") = 1,
      "Run the exhaustive verifiers and return one report dict per verifier.");

  py::register_exception<sucfix::StructuralError>(m, "StructuralError");

  m.attr("MAX_ENUMERATION_SIZE") = sucfix::kMaxEnumerationSize;
  m.attr("MAX_TABLE_SIZE") = sucfix::kMaxTableSize;
}
