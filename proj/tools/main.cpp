#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mpmul/batch.hpp"
#include "mpmul/errors.hpp"
#include "mpmul/fp_multiplier.hpp"
#include "mpmul/karatsuba.hpp"
#include "mpmul/selftest.hpp"
#include "mpmul/urdhva.hpp"

namespace {

using namespace mpmul;

// Exit codes: 0 success, 1 usage/parse error (and any other library error),
// 2 mode mismatch, 3 selftest failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitModeMismatch = 2;
constexpr int kExitSelftest = 3;

uint64_t parse_uint(const std::string& text, const char* what) {
  try {
    size_t pos = 0;
    const uint64_t v = std::stoull(text, &pos, 0);
    if (pos != text.size()) {
      throw std::invalid_argument(text);
    }
    return v;
  } catch (const std::exception&) {
    throw Error(errc::parse_error,
                std::string("invalid ") + what + " '" + text + "'");
  }
}

Rounding rounding_from_name(const std::string& name) {
  if (name == "truncate") return Rounding::Truncate;
  if (name == "nearest-even") return Rounding::NearestEven;
  throw Error(errc::parse_error,
              "invalid rounding '" + name +
                  "' (expected truncate or nearest-even)");
}

void print_result_line(const ProductResult& r) {
  std::cout << to_hex(r.word) << " flags=" << result_class_name(r.flags)
            << " mode=" << mode_name(r.resolved_mode)
            << " shift=" << r.norm_shift << '\n';
}

// Exact operand value as an integer significand scaled by 2^exp2, taken
// from the full stored fraction (no truncation).
struct ExactValue {
  uint128 sig = 0;
  int exp2 = 0;
  bool special = false;  // operand encodes Inf or NaN
};

ExactValue exact_operand(const DecodedWord& d, const ModeConfig& cfg) {
  ExactValue v;
  if (d.exponent_field == cfg.exp_all_ones) {
    v.special = true;
    return v;
  }
  const uint64_t hidden =
      d.exponent_field != 0 ? uint64_t{1} << kMantissaFieldBits : 0;
  v.sig = hidden | d.mantissa_field;
  const int e = d.exponent_field != 0 ? static_cast<int>(d.exponent_field) : 1;
  v.exp2 = e - static_cast<int>(cfg.bias) - kMantissaFieldBits;
  return v;
}

void print_oracle_comparison(Word67 a, Word67 b, const ProductResult& r) {
  const ModeConfig cfg = mode_config(r.resolved_mode);
  const ExactValue va = exact_operand(decode_word(a), cfg);
  const ExactValue vb = exact_operand(decode_word(b), cfg);
  if (va.special || vb.special || va.sig == 0 || vb.sig == 0 ||
      (r.flags != ResultClass::Normal && r.flags != ResultClass::Denormal)) {
    std::cout << "oracle: comparison skipped (non-finite or zero case)\n";
    return;
  }

  const uint128 sig = va.sig * vb.sig;  // at most 106 bits
  const int exp2 = va.exp2 + vb.exp2;
  const int digits = (bit_width_128(sig) + 3) / 4;

  const DecodedWord dr = decode_word(r.word);
  const int m = cfg.mantissa_width;
  const uint64_t r_mant = dr.mantissa_field >> (kMantissaFieldBits - m);
  const uint64_t r_sig =
      (dr.exponent_field != 0 ? uint64_t{1} << m : 0) | r_mant;
  const int r_e =
      dr.exponent_field != 0 ? static_cast<int>(dr.exponent_field) : 1;
  const int r_exp2 = r_e - static_cast<int>(cfg.bias) - m;

  const long double exact = ldexpl(static_cast<long double>(sig), exp2);
  const long double got = ldexpl(static_cast<long double>(r_sig), r_exp2);
  const long double abs_err = fabsl(got - exact);
  const long double rel_err = exact != 0 ? abs_err / exact : 0;

  char line[160];
  std::snprintf(line, sizeof line,
                "oracle: sig=0x%s exp2=%d abs_err=%.3Le rel_err=%.3Le\n",
                to_hex(sig, digits).c_str(), exp2, abs_err, rel_err);
  std::cout << line;
}

void print_stats_line(const MulStats& s) {
  std::cout << s.operand_width << ' ' << s.depth << ' ' << s.base_multiplies
            << ' ' << s.add_ops << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"run-time reconfigurable multi-precision floating-point "
               "multiplier model"};
  app.require_subcommand(1);

  std::string rounding_name = "truncate";

  auto* encode = app.add_subcommand("encode", "Pack fields into a hex word");
  std::string enc_mode, enc_sign, enc_exp, enc_mant;
  encode->add_option("mode", enc_mode, "Auto or M2..M6")->required();
  encode->add_option("sign", enc_sign, "0 or 1")->required();
  encode->add_option("exponent", enc_exp, "11-bit exponent field")->required();
  encode->add_option("mantissa", enc_mant, "52-bit mantissa field")->required();

  auto* decode = app.add_subcommand("decode", "Split a hex word into fields");
  std::string dec_word;
  decode->add_option("word", dec_word, "17 hex digits")->required();

  auto* mul = app.add_subcommand("mul", "Multiply two hex words");
  std::string mul_a, mul_b;
  bool compare_oracle = false;
  mul->add_option("a", mul_a, "left operand, 17 hex digits")->required();
  mul->add_option("b", mul_b, "right operand, 17 hex digits")->required();
  mul->add_option("--rounding", rounding_name,
                  "truncate (default) or nearest-even");
  mul->add_flag("--compare-oracle", compare_oracle,
                "also print the exact wide-integer product and the error");

  auto* batch = app.add_subcommand("batch", "Multiply '<a> <b> [expected]' "
                                            "lines from a file");
  std::string batch_path;
  bool strict = false;
  batch->add_option("file", batch_path, "input path")->required();
  batch->add_option("--rounding", rounding_name,
                    "truncate (default) or nearest-even");
  batch->add_flag("--strict", strict, "abort on the first bad line");

  auto* stats = app.add_subcommand(
      "stats", "Print 'width depth base_muls add_ops' structural costs");
  int stats_width = 0;
  std::string stats_mode;
  bool stats_all = false;
  stats->add_option("--width", stats_width, "operand width in bits (1..64)");
  stats->add_option("--mode", stats_mode,
                    "mode name; uses the mode's significand width");
  stats->add_flag("--all", stats_all, "table across M2..M6");

  auto* selftest =
      app.add_subcommand("selftest", "Run the built-in differential suites");
  bool quick = false;
  selftest->add_flag("--quick", quick, "reduced random case counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (encode->parsed()) {
      const Word67 w = encode_word(
          mode_from_name(enc_mode),
          static_cast<unsigned>(parse_uint(enc_sign, "sign")),
          static_cast<uint32_t>(parse_uint(enc_exp, "exponent field")),
          parse_uint(enc_mant, "mantissa field"));
      std::cout << to_hex(w) << '\n';
      return kExitOk;
    }

    if (decode->parsed()) {
      const DecodedWord d = decode_word(word_from_hex(dec_word));
      std::cout << "mode=" << mode_name(d.mode) << " sign=" << d.sign
                << " exp=" << d.exponent_field << " mant=0x"
                << to_hex(static_cast<uint128>(d.mantissa_field), 13) << '\n';
      return kExitOk;
    }

    if (mul->parsed()) {
      const Word67 a = word_from_hex(mul_a);
      const Word67 b = word_from_hex(mul_b);
      const ProductResult r =
          multiply(a, b, rounding_from_name(rounding_name));
      print_result_line(r);
      if (compare_oracle) {
        print_oracle_comparison(a, b, r);
      }
      return kExitOk;
    }

    if (batch->parsed()) {
      std::ifstream in(batch_path);
      if (!in) {
        throw Error(errc::parse_error, "cannot open '" + batch_path + "'");
      }
      BatchOptions options;
      options.rounding = rounding_from_name(rounding_name);
      options.strict = strict;
      const BatchSummary summary = run_batch(in, std::cout, options);
      return summary.fail == 0 ? kExitOk : kExitUsage;
    }

    if (stats->parsed()) {
      const int selected = (stats_width != 0) + !stats_mode.empty() +
                           stats_all;
      if (selected != 1) {
        throw Error(errc::parse_error,
                    "choose exactly one of --width, --mode, --all");
      }
      if (stats_all) {
        std::cout << "mode width depth base_muls add_ops urdhva_adders\n";
        for (const ModeId mode :
             {ModeId::M2, ModeId::M3, ModeId::M4, ModeId::M5, ModeId::M6}) {
          const ModeConfig cfg = mode_config(mode);
          const MulStats s = karatsuba_stats(cfg.mantissa_width + 1);
          std::cout << mode_name(mode) << ' ' << s.operand_width << ' '
                    << s.depth << ' ' << s.base_multiplies << ' ' << s.add_ops
                    << ' ' << urdhva_stats(kKaratsubaBaseWidth).adders << '\n';
        }
      } else if (!stats_mode.empty()) {
        const ModeConfig cfg = mode_config(mode_from_name(stats_mode));
        print_stats_line(karatsuba_stats(cfg.mantissa_width + 1));
      } else {
        print_stats_line(karatsuba_stats(stats_width));
      }
      return kExitOk;
    }

    if (selftest->parsed()) {
      SelftestOptions options;
      options.quick = quick;
      return run_selftest(std::cout, options).ok() ? kExitOk : kExitSelftest;
    }
  } catch (const ModeMismatchError& e) {
    std::cerr << e.what() << '\n';
    return kExitModeMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  return kExitUsage;
}
