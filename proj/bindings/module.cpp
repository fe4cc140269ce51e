// Python bindings for the main operations: the window <-> lecture hall
// bijection, statistics, enumeration, identity checks, and the length oracle.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hallway/affine.hpp"
#include "hallway/identities.hpp"
#include "hallway/invseq.hpp"
#include "hallway/lecturehall.hpp"
#include "hallway/perms.hpp"

namespace py = pybind11;
using namespace hallway;

namespace {

CosetRep make_rep(const std::vector<long long>& window) { return CosetRep(window); }

LHPartition make_lhp(const std::vector<long long>& parts) {
  return LHPartition(parts, SSequence::natural(static_cast<int>(parts.size())));
}

py::dict stats_dict(const std::vector<long long>& window) {
  const CosetRep w = make_rep(window);
  const WindowStats st = stats(w);
  py::dict d;
  d["inv_tilde"] = st.inv_tilde;
  d["neg"] = st.neg;
  d["alpha"] = st.alpha;
  d["beta"] = st.beta;
  d["last"] = st.last;
  d["max"] = st.max;
  d["odd_inv"] = st.odd_inv;
  d["even_inv"] = st.even_inv;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hallway, m) {
  m.doc() = "exact engine for the affine hyperoctahedral quotient and "
            "lecture hall partitions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("window_to_lhp", [](const std::vector<long long>& window) {
    return to_lhp(make_rep(window)).parts();
  });
  m.def("lhp_to_window", [](const std::vector<long long>& parts) {
    return from_lhp(make_lhp(parts)).window();
  });
  m.def("decompose", [](const std::vector<long long>& window) {
    const Decomposition d = decompose(make_rep(window));
    return py::make_tuple(d.c, d.sigma.values());
  });
  m.def("stats", &stats_dict);
  m.def("class_inv", [](const std::vector<long long>& window) {
    return class_inv(make_rep(window)).total;
  });

  m.def("inv_c", [](const std::vector<int>& sigma) {
    return inv_c(SignedPermutation(sigma));
  });
  m.def("comaj", [](const std::vector<int>& sigma) {
    return comaj(SignedPermutation(sigma));
  });
  m.def("lhp_c", [](const std::vector<int>& sigma) {
    return lhp_c(SignedPermutation(sigma));
  });
  m.def("des_set", [](const std::vector<int>& sigma) {
    return des_set_signed(SignedPermutation(sigma));
  });

  m.def("psi", [](const std::vector<int>& sigma) {
    return psi(SignedPermutation(sigma)).values();
  });
  m.def("psi_inverse", [](const std::vector<long long>& e) {
    const int n = static_cast<int>(e.size());
    return psi_inverse(InversionSequence(e, SSequence::doubled(n))).values();
  });
  m.def("theta", [](const std::vector<int>& pi) {
    return theta(Permutation(pi)).values();
  });
  m.def("asc_set", [](const std::vector<long long>& e, const std::vector<long long>& s) {
    return asc_set(InversionSequence(e, SSequence(s)));
  });

  m.def("is_lhp", [](const std::vector<long long>& parts) {
    return is_lhp(parts, SSequence::natural(static_cast<int>(parts.size())));
  });
  m.def("lhp_partitions", [](int n, long long weight_bound) {
    std::vector<std::vector<long long>> out;
    for_each_lhp_by_weight(SSequence::natural(n), weight_bound,
                           [&](const LHPartition& l) { out.push_back(l.parts()); });
    return out;
  });
  m.def("coset_reps", [](int n, long long max_wn) {
    std::vector<std::vector<long long>> out;
    for_each_coset_rep(n, max_wn,
                       [&](const CosetRep& w) { out.push_back(w.window()); });
    return out;
  });

  m.def("length_oracle",
        [](const std::vector<long long>& window, int depth_cap, long long node_cap) {
          const CosetRep w = make_rep(window);
          LengthOracle oracle(w.rank(), depth_cap, static_cast<std::size_t>(node_cap));
          const auto result = oracle.find(w);
          if (!result) throw ResourceError("search caps reached");
          py::dict d;
          d["length"] = result->length;
          d["word"] = result->word;
          d["s0_count"] = result->s0_count;
          d["sn_count"] = result->sn_count;
          return d;
        },
        py::arg("window"), py::arg("depth_cap") = 14,
        py::arg("node_cap") = 5'000'000);

  m.def("verify", [](const std::string& id, const std::map<std::string, long long>& params) {
    const identities::CheckReport report = identities::run_check(id, params);
    py::dict d;
    d["id"] = report.id;
    d["equal"] = report.equal;
    d["lhs"] = report.lhs_str;
    d["rhs"] = report.rhs_str;
    return d;
  });
  m.def("known_checks", &identities::known_checks);
}
