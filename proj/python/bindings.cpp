#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpmul/batch.hpp"
#include "mpmul/errors.hpp"
#include "mpmul/fp_multiplier.hpp"
#include "mpmul/karatsuba.hpp"
#include "mpmul/urdhva.hpp"

namespace py = pybind11;

namespace {

using namespace mpmul;

// Python integers take 128-bit products without loss: (hi << 64) | lo.
py::object to_py_int(uint128 v) {
  py::object hi = py::reinterpret_steal<py::object>(
      PyLong_FromUnsignedLongLong(hi64(v)));
  py::object lo = py::reinterpret_steal<py::object>(
      PyLong_FromUnsignedLongLong(lo64(v)));
  py::object shift = py::reinterpret_steal<py::object>(PyLong_FromLong(64));
  py::object shifted = py::reinterpret_steal<py::object>(
      PyNumber_Lshift(hi.ptr(), shift.ptr()));
  return py::reinterpret_steal<py::object>(
      PyNumber_Or(shifted.ptr(), lo.ptr()));
}

std::string repr_mode(ModeId mode) { return std::string(mode_name(mode)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bit-exact model of a run-time reconfigurable multi-precision "
            "floating-point multiplier";

  const auto error =
      py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ModeMismatchError>(m, "ModeMismatchError",
                                            error.ptr());

  py::enum_<ModeId>(m, "ModeId")
      .value("Auto", ModeId::Auto)
      .value("M2", ModeId::M2)
      .value("M3", ModeId::M3)
      .value("M4", ModeId::M4)
      .value("M5", ModeId::M5)
      .value("M6", ModeId::M6);

  py::enum_<Rounding>(m, "Rounding")
      .value("Truncate", Rounding::Truncate)
      .value("NearestEven", Rounding::NearestEven);

  py::enum_<ResultClass>(m, "ResultClass")
      .value("Zero", ResultClass::Zero)
      .value("Infinity", ResultClass::Infinity)
      .value("NaN", ResultClass::NaN)
      .value("Denormal", ResultClass::Denormal)
      .value("Normal", ResultClass::Normal);

  py::class_<ModeConfig>(m, "ModeConfig")
      .def_readonly("mantissa_width", &ModeConfig::mantissa_width)
      .def_readonly("exponent_width", &ModeConfig::exponent_width)
      .def_readonly("bias", &ModeConfig::bias)
      .def_readonly("exp_all_ones", &ModeConfig::exp_all_ones)
      .def("__repr__", [](const ModeConfig& c) {
        return "ModeConfig(mantissa_width=" + std::to_string(c.mantissa_width) +
               ", exponent_width=" + std::to_string(c.exponent_width) +
               ", bias=" + std::to_string(c.bias) +
               ", exp_all_ones=" + std::to_string(c.exp_all_ones) + ")";
      });

  py::class_<DecodedWord>(m, "DecodedWord")
      .def_readonly("mode", &DecodedWord::mode)
      .def_readonly("sign", &DecodedWord::sign)
      .def_readonly("exponent_field", &DecodedWord::exponent_field)
      .def_readonly("mantissa_field", &DecodedWord::mantissa_field)
      .def("__repr__", [](const DecodedWord& d) {
        return "DecodedWord(mode=" + repr_mode(d.mode) +
               ", sign=" + std::to_string(d.sign) +
               ", exponent_field=" + std::to_string(d.exponent_field) +
               ", mantissa_field=" + std::to_string(d.mantissa_field) + ")";
      });

  py::class_<ModeResolution>(m, "ModeResolution")
      .def_readonly("mode", &ModeResolution::mode)
      .def_readonly("auto_chosen", &ModeResolution::auto_chosen)
      .def_readonly("per_operand_bits", &ModeResolution::per_operand_bits)
      .def("__repr__", [](const ModeResolution& r) {
        return "ModeResolution(mode=" + repr_mode(r.mode) + ", auto_chosen=" +
               (r.auto_chosen ? std::string("True") : std::string("False")) +
               ")";
      });

  py::class_<Truncated>(m, "Truncated")
      .def_readonly("mantissa", &Truncated::mantissa)
      .def_readonly("exponent_increment", &Truncated::exponent_increment);

  py::class_<MulStats>(m, "MulStats")
      .def_readonly("operand_width", &MulStats::operand_width)
      .def_readonly("depth", &MulStats::depth)
      .def_readonly("base_multiplies", &MulStats::base_multiplies)
      .def_readonly("add_ops", &MulStats::add_ops)
      .def("__repr__", [](const MulStats& s) {
        return "MulStats(operand_width=" + std::to_string(s.operand_width) +
               ", depth=" + std::to_string(s.depth) +
               ", base_multiplies=" + std::to_string(s.base_multiplies) +
               ", add_ops=" + std::to_string(s.add_ops) + ")";
      });

  py::class_<UrdhvaStats>(m, "UrdhvaStats")
      .def_readonly("adders", &UrdhvaStats::adders)
      .def_readonly("max_column_height", &UrdhvaStats::max_column_height);

  py::class_<ProductResult>(m, "ProductResult")
      .def_property_readonly(
          "word", [](const ProductResult& r) { return to_hex(r.word); })
      .def_readonly("flags", &ProductResult::flags)
      .def_readonly("norm_shift", &ProductResult::norm_shift)
      .def_readonly("resolved_mode", &ProductResult::resolved_mode)
      .def("__repr__", [](const ProductResult& r) {
        return "ProductResult(word='" + to_hex(r.word) +
               "', flags=" + std::string(result_class_name(r.flags)) +
               ", norm_shift=" + std::to_string(r.norm_shift) +
               ", resolved_mode=" + repr_mode(r.resolved_mode) + ")";
      });

  m.def(
      "encode_word",
      [](ModeId mode, unsigned sign, uint32_t exponent_field,
         uint64_t mantissa_field) {
        return to_hex(encode_word(mode, sign, exponent_field, mantissa_field));
      },
      py::arg("mode"), py::arg("sign"), py::arg("exponent_field"),
      py::arg("mantissa_field"),
      "Pack fields into the 17-hex-digit word form");

  m.def(
      "decode_word",
      [](const std::string& word) { return decode_word(word_from_hex(word)); },
      py::arg("word"), "Split a 17-hex-digit word into fields");

  m.def("mode_config", &mode_config, py::arg("mode"));
  m.def("mode_name", &repr_mode, py::arg("mode"));
  m.def("mode_from_name", &mode_from_name, py::arg("name"));
  m.def("significant_width", &significant_width, py::arg("mantissa_field"));
  m.def("auto_select", &auto_select, py::arg("mantissa_a"),
        py::arg("mantissa_b"));

  m.def(
      "resolve_mode",
      [](const std::string& a, const std::string& b) {
        return resolve_mode(word_from_hex(a), word_from_hex(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "truncate_operand",
      [](uint64_t mantissa_field, ModeId mode, Rounding rounding) {
        return truncate_operand(mantissa_field, mode_config(mode), rounding);
      },
      py::arg("mantissa_field"), py::arg("mode"),
      py::arg("rounding") = Rounding::Truncate);

  m.def(
      "urdhva_mul",
      [](uint64_t a, uint64_t b, int width) {
        return to_py_int(urdhva_mul(a, b, width));
      },
      py::arg("a"), py::arg("b"), py::arg("width"));

  m.def("urdhva_stats", &urdhva_stats, py::arg("width"));

  m.def(
      "karatsuba",
      [](uint64_t x, uint64_t y, int width) {
        return to_py_int(karatsuba(x, y, width));
      },
      py::arg("x"), py::arg("y"), py::arg("width"));

  m.def("karatsuba_stats", &karatsuba_stats, py::arg("width"));

  m.def(
      "multiply",
      [](const std::string& a, const std::string& b, Rounding rounding) {
        return multiply(word_from_hex(a), word_from_hex(b), rounding);
      },
      py::arg("a"), py::arg("b"), py::arg("rounding") = Rounding::Truncate,
      "Multiply two words given in the 17-hex-digit form");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
