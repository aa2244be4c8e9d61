#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sternbp/bfile.hpp"
#include "sternbp/bigint.hpp"
#include "sternbp/descent.hpp"
#include "sternbp/oracle.hpp"
#include "sternbp/sequences.hpp"
#include "sternbp/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> python int, via hex strings so values of any size survive.
template <>
struct type_caster<mpz_class> {
 public:
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* hex = PyNumber_ToBase(src.ptr(), 16);  // "0x..." / "-0x..."
    if (!hex) throw error_already_set();
    const std::string text = reinterpret_steal<str>(hex).cast<std::string>();
    value = mpz_class(text, 0);
    return true;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    const std::string hex = src.get_str(16);
    PyObject* obj = PyLong_FromString(hex.c_str(), nullptr, 16);
    if (!obj) throw error_already_set();
    return obj;
  }
};

}  // namespace pybind11::detail

namespace {

sternbp::SequenceKind kind_from(const std::string& name, int digit_bound) {
  auto kind = sternbp::SequenceKind::parse(name, digit_bound);
  if (!kind) {
    throw std::invalid_argument(
        "unknown sequence \"" + name +
        "\" (expected bprime|b|hatb|stern|sigma|digits)");
  }
  return *kind;
}

std::vector<sternbp::Count> prefix_values(const std::string& name,
                                          std::size_t count,
                                          int digit_bound) {
  using Tag = sternbp::SequenceKind::Tag;
  const sternbp::SequenceKind kind = kind_from(name, digit_bound);
  switch (kind.tag) {
    case Tag::BPrime:
      return sternbp::bprime_prefix(count);
    case Tag::B:
      return sternbp::b_prefix(count);
    case Tag::HatB:
      return sternbp::hatb_prefix(count);
    case Tag::Stern:
      return sternbp::stern_prefix(count);
    case Tag::Sigma:
      return sternbp::sigma_prefix(count);
    case Tag::DigitCount:
      return sternbp::digit_count_prefix(sternbp::DigitBound(kind.digit_bound),
                                         count);
  }
  throw std::logic_error("unknown sequence kind");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  using sternbp::Count;
  using sternbp::Index;

  m.doc() =
      "Digit-restricted binary partition counts and the Stern diatomic "
      "sequence, with cross-checked evaluation engines";

  py::class_<sternbp::CheckReport>(m, "CheckReport")
      .def_readonly("check_name", &sternbp::CheckReport::check_name)
      .def_readonly("passed", &sternbp::CheckReport::passed)
      .def_property_readonly("range",
                             [](const sternbp::CheckReport& r) {
                               return py::make_tuple(r.range_lo, r.range_hi);
                             })
      .def_property_readonly(
          "first_failure",
          [](const sternbp::CheckReport& r) -> py::object {
            if (!r.first_failure) return py::none();
            return py::make_tuple(r.first_failure->index,
                                  r.first_failure->expected,
                                  r.first_failure->actual);
          })
      .def("summary", &sternbp::CheckReport::summary_line)
      .def("__repr__", [](const sternbp::CheckReport& r) {
        return "<CheckReport " + r.summary_line() + ">";
      });

  m.def("bprime", [](const Index& k) { return sternbp::bprime(k); },
        py::arg("k"), "Sixth binary partition count b'(k)");
  m.def("b", [](const Index& k) { return sternbp::b(k); }, py::arg("k"),
        "b(k) = b'(2k)");
  m.def("hatb", [](const Index& k) { return sternbp::hatb(k); }, py::arg("k"),
        "hatb(0) = 0, hatb(k) = b(k-1)");
  m.def("stern", [](const Index& k) { return sternbp::stern(k); },
        py::arg("k"), "Stern diatomic sequence s(k)");
  m.def("sigma", [](const Index& k) { return sternbp::sigma(k); },
        py::arg("k"), "Partial sums sigma(k) = s(0) + ... + s(k)");
  m.def(
      "digit_count",
      [](int d, const Index& k) {
        return sternbp::digit_count(sternbp::DigitBound(d), k);
      },
      py::arg("d"), py::arg("k"),
      "Representations of k in base 2 with digits in {0,...,d}");

  m.def(
      "stern_pair",
      [](const Index& k) {
        sternbp::SternPair p = sternbp::stern_pair_descent(k);
        return py::make_tuple(p.lo, p.hi);
      },
      py::arg("k"), "(s(k), s(k+1)) by binary descent, O(bits) operations");
  m.def(
      "sigma_triple",
      [](const Index& k) {
        sternbp::SigmaTriple t = sternbp::sigma_triple_descent(k);
        return py::make_tuple(t.prev, t.cur, t.next);
      },
      py::arg("k"),
      "(sigma(k-1), sigma(k), sigma(k+1)) by binary descent; k >= 1");

  m.def(
      "eval_seq",
      [](const std::string& seq, const Index& k, int digit_bound) {
        return sternbp::eval_any(kind_from(seq, digit_bound), k);
      },
      py::arg("seq"), py::arg("k"), py::arg("digit_bound") = 5,
      "Evaluate any sequence at k through the fastest engine");
  m.def("prefix", &prefix_values, py::arg("seq"), py::arg("count"),
        py::arg("digit_bound") = 5,
        "First `count` values of a sequence as a list");
  m.def(
      "gf_counts",
      [](int d, std::size_t max_n, std::size_t table_cap) {
        return sternbp::gf_counts(sternbp::DigitBound(d), max_n, table_cap)
            .counts;
      },
      py::arg("d"), py::arg("max_n"),
      py::arg("table_cap") = sternbp::kDefaultTableCap,
      "Generating-function oracle: counts for 0..max_n as a list");

  m.def(
      "bfile_text",
      [](const std::string& seq, const Index& from, const Index& to,
         int digit_bound) {
        return sternbp::emit_bfile_text(kind_from(seq, digit_bound), from, to);
      },
      py::arg("seq"), py::arg("from_index"), py::arg("to_index"),
      py::arg("digit_bound") = 5, "OEIS b-file text for an index range");
  m.def(
      "compare_bfile_text",
      [](const std::string& seq, const std::string& text, int digit_bound) {
        return sternbp::compare_bfile(kind_from(seq, digit_bound),
                                      sternbp::parse_bfile_text(text));
      },
      py::arg("seq"), py::arg("text"), py::arg("digit_bound") = 5,
      "Recompute and diff b-file text against a sequence");

  m.def("check_main_identity", &sternbp::check_main_identity,
        py::arg("limit"), "hatb(k) == sigma(k) for 0 <= k <= limit");
  m.def("check_halving", &sternbp::check_halving, py::arg("limit"),
        py::arg("table_cap") = sternbp::kDefaultTableCap,
        "bprime(2k+1) == bprime(2k) for 0 <= k <= limit");
  m.def("replay_proof", &sternbp::replay_proof, py::arg("limit"),
        "Replay every derivation step up to limit");
  m.def("cross_engines", &sternbp::cross_engines, py::arg("samples"),
        py::arg("max_bits"), py::arg("seed"),
        "Descent engines vs memoized recurrences on random indices");

  m.def("a174868_prefix", []() {
    const auto& p = sternbp::a174868_prefix();
    return std::vector<unsigned>(p.begin(), p.end());
  });

  m.attr("__version__") = "0.1.0";
}
