#include "tribospin.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tribospin/families.hpp"
#include "tribospin/poly_spinor.hpp"
#include "tribospin/serialization.hpp"
#include "tribospin/spinor.hpp"
#include "tribospin/split_quaternion.hpp"
#include "tribospin/verification.hpp"

using tribospin::Rational;

struct ts_params {
  tribospin::SequenceParams value;
};

struct ts_poly_params {
  tribospin::PolySequenceParams value;
};

namespace {

thread_local std::string g_last_error;

ts_status map_error_code(tribospin::ErrorCode code) {
  using tribospin::ErrorCode;
  switch (code) {
    case ErrorCode::ZeroDivisor:
      return TS_ERR_ZERO_DIVISOR;
    case ErrorCode::ZeroDenominator:
      return TS_ERR_ZERO_DENOMINATOR;
    case ErrorCode::RepeatedRoots:
      return TS_ERR_REPEATED_ROOTS;
    case ErrorCode::PreconditionViolated:
      return TS_ERR_PRECONDITION;
    case ErrorCode::NotFound:
      return TS_ERR_NOT_FOUND;
    case ErrorCode::SingularPivot:
      return TS_ERR_SINGULAR_PIVOT;
    case ErrorCode::LimitExceeded:
      return TS_ERR_LIMIT;
    case ErrorCode::Parse:
      return TS_ERR_PARSE;
  }
  return TS_ERR_INTERNAL;
}

template <typename Fn>
ts_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TS_OK;
  } catch (const tribospin::Error& e) {
    g_last_error = e.what();
    return map_error_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return TS_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ts_status require(bool ok, const char* message) {
  if (ok) return TS_OK;
  g_last_error = message;
  return TS_ERR_INVALID_ARGUMENT;
}

Rational parse_rational_arg(const char* text, const char* what) {
  if (text == nullptr) throw tribospin::ParseError(std::string(what) + " is null");
  return Rational::parse(text);
}

}  // namespace

extern "C" {

const char* ts_version(void) { return "1.0.0"; }

const char* ts_status_name(ts_status s) {
  switch (s) {
    case TS_OK:
      return "ok";
    case TS_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TS_ERR_NOT_FOUND:
      return "not found";
    case TS_ERR_ZERO_DENOMINATOR:
      return "zero denominator";
    case TS_ERR_ZERO_DIVISOR:
      return "zero divisor";
    case TS_ERR_REPEATED_ROOTS:
      return "repeated roots";
    case TS_ERR_PRECONDITION:
      return "precondition violated";
    case TS_ERR_SINGULAR_PIVOT:
      return "singular pivot";
    case TS_ERR_LIMIT:
      return "limit exceeded";
    case TS_ERR_PARSE:
      return "parse error";
    case TS_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* ts_last_error(void) { return g_last_error.c_str(); }

void ts_string_free(char* s) { std::free(s); }

ts_status ts_params_create(const char* a, const char* b, const char* c, const char* r,
                           const char* s, const char* t, ts_params** out) {
  if (ts_status st = require(out != nullptr, "output pointer is null"); st != TS_OK) return st;
  return guarded([&] {
    tribospin::SequenceParams p{parse_rational_arg(a, "a"), parse_rational_arg(b, "b"),
                                parse_rational_arg(c, "c"), parse_rational_arg(r, "r"),
                                parse_rational_arg(s, "s"), parse_rational_arg(t, "t")};
    *out = new ts_params{std::move(p)};
  });
}

ts_status ts_params_from_family(const char* name, ts_params** out) {
  if (ts_status st = require(out != nullptr && name != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    const tribospin::FamilyDescriptor& f = tribospin::family_lookup(name);
    if (f.generic)
      throw tribospin::PreconditionError("family '" + f.name +
                                         "' is generic; initial values are required");
    *out = new ts_params{f.params};
  });
}

ts_status ts_params_from_family_with_initials(const char* name, const char* a, const char* b,
                                              const char* c, ts_params** out) {
  if (ts_status st = require(out != nullptr && name != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    tribospin::SequenceParams p = tribospin::family_lookup(name).params;
    p.a = parse_rational_arg(a, "a");
    p.b = parse_rational_arg(b, "b");
    p.c = parse_rational_arg(c, "c");
    *out = new ts_params{std::move(p)};
  });
}

ts_status ts_params_is_generic_family(const char* name, int* out_generic) {
  if (ts_status st = require(name != nullptr && out_generic != nullptr, "null argument");
      st != TS_OK)
    return st;
  return guarded([&] { *out_generic = tribospin::family_lookup(name).generic ? 1 : 0; });
}

void ts_params_free(ts_params* p) { delete p; }

ts_status ts_term(const ts_params* p, long n, char** out_rational) {
  if (ts_status st = require(p != nullptr && out_rational != nullptr, "null argument");
      st != TS_OK)
    return st;
  return guarded([&] { *out_rational = dup_string(tribospin::term(p->value, n).str()); });
}

ts_status ts_term_by_matrix(const ts_params* p, long n, char** out_rational) {
  if (ts_status st = require(p != nullptr && out_rational != nullptr, "null argument");
      st != TS_OK)
    return st;
  return guarded([&] { *out_rational = dup_string(tribospin::term_by_matrix(p->value, n).str()); });
}

ts_status ts_binet_term(const ts_params* p, long n, double* out_re, double* out_im) {
  if (ts_status st =
          require(p != nullptr && out_re != nullptr && out_im != nullptr, "null argument");
      st != TS_OK)
    return st;
  return guarded([&] {
    const std::complex<double> v = tribospin::binet_term(p->value, n);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

ts_status ts_characteristic_roots(const ts_params* p, double out_roots[6], int* out_distinct) {
  if (ts_status st =
          require(p != nullptr && out_roots != nullptr && out_distinct != nullptr, "null argument");
      st != TS_OK)
    return st;
  return guarded([&] {
    const tribospin::CharacteristicRoots roots = tribospin::characteristic_roots(p->value);
    out_roots[0] = roots.sigma1.real();
    out_roots[1] = roots.sigma1.imag();
    out_roots[2] = roots.sigma2.real();
    out_roots[3] = roots.sigma2.imag();
    out_roots[4] = roots.sigma3.real();
    out_roots[5] = roots.sigma3.imag();
    *out_distinct = roots.distinct ? 1 : 0;
  });
}

ts_status ts_sum(const ts_params* p, long m, ts_sum_kind kind, char** out_rational) {
  if (ts_status st = require(p != nullptr && out_rational != nullptr, "null argument");
      st != TS_OK)
    return st;
  return guarded([&] {
    Rational v;
    switch (kind) {
      case TS_SUM_ALL:
        v = tribospin::sum_first(p->value, m);
        break;
      case TS_SUM_EVEN:
        v = tribospin::sum_even(p->value, m);
        break;
      case TS_SUM_ODD:
        v = tribospin::sum_odd(p->value, m);
        break;
      case TS_SUM_S1_EVEN:
        v = tribospin::sum_special_s1(p->value, m, tribospin::Parity::Even);
        break;
      case TS_SUM_S1_ODD:
        v = tribospin::sum_special_s1(p->value, m, tribospin::Parity::Odd);
        break;
      default:
        throw tribospin::PreconditionError("unknown sum kind");
    }
    *out_rational = dup_string(v.str());
  });
}

ts_status ts_det_term(const ts_params* p, long n, ts_det_method method, char** out_rational) {
  if (ts_status st = require(p != nullptr && out_rational != nullptr, "null argument");
      st != TS_OK)
    return st;
  return guarded([&] {
    const Rational v = method == TS_DET_HESSENBERG ? tribospin::det_term_hessenberg(p->value, n)
                                                   : tribospin::det_term_cereceda(p->value, n);
    *out_rational = dup_string(v.str());
  });
}

ts_status ts_quaternion(const ts_params* p, long n, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    *out_json = dup_string(tribospin::to_json(tribospin::gtn_quaternion(p->value, n)).dump());
  });
}

ts_status ts_spinor(const ts_params* p, long n, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    *out_json = dup_string(tribospin::to_json(tribospin::spinor_term(p->value, n)).dump());
  });
}

ts_status ts_spinor_by_matrix(const ts_params* p, long n, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    *out_json =
        dup_string(tribospin::to_json(tribospin::spinor_term_by_matrix(p->value, n)).dump());
  });
}

ts_status ts_spinor_norm(const ts_params* p, long n, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    *out_json = dup_string(
        tribospin::to_json(tribospin::spinor_norm(tribospin::spinor_term(p->value, n))).dump());
  });
}

ts_status ts_spinor_sum(const ts_params* p, long m, ts_sum_kind kind, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    tribospin::HSpinor v;
    switch (kind) {
      case TS_SUM_ALL:
        v = tribospin::spinor_sum_first(p->value, m);
        break;
      case TS_SUM_EVEN:
        v = tribospin::spinor_sum_even(p->value, m);
        break;
      case TS_SUM_ODD:
        v = tribospin::spinor_sum_odd(p->value, m);
        break;
      case TS_SUM_S1_EVEN:
        v = tribospin::spinor_sum_special_s1(p->value, m, tribospin::Parity::Even);
        break;
      case TS_SUM_S1_ODD:
        v = tribospin::spinor_sum_special_s1(p->value, m, tribospin::Parity::Odd);
        break;
      default:
        throw tribospin::PreconditionError("unknown sum kind");
    }
    *out_json = dup_string(tribospin::to_json(v).dump());
  });
}

ts_status ts_spinor_det(const ts_params* p, long n, ts_det_method method, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    const tribospin::HSpinor v = method == TS_DET_HESSENBERG
                                     ? tribospin::spinor_det_hessenberg(p->value, n)
                                     : tribospin::spinor_det_cereceda(p->value, n);
    *out_json = dup_string(tribospin::to_json(v).dump());
  });
}

ts_status ts_spinor_binet(const ts_params* p, long n, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    *out_json = dup_string(tribospin::to_json(tribospin::spinor_binet(p->value, n)).dump());
  });
}

ts_status ts_gf_check(const ts_params* p, long truncation_degree, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    const bool ok = tribospin::generating_function_check(p->value, truncation_degree);
    const auto numerator = tribospin::gf_numerator(p->value);
    nlohmann::json doc;
    doc["ok"] = ok;
    doc["degree"] = truncation_degree;
    doc["numerator"] = {tribospin::to_json(numerator[0]), tribospin::to_json(numerator[1]),
                        tribospin::to_json(numerator[2])};
    *out_json = dup_string(doc.dump());
  });
}

ts_status ts_egf_check(const ts_params* p, const double* y_samples, size_t n_samples, long terms,
                       double tol, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr &&
                                 (y_samples != nullptr || n_samples == 0),
                             "null argument");
      st != TS_OK)
    return st;
  return guarded([&] {
    const std::vector<double> ys(y_samples, y_samples + n_samples);
    const bool egf_ok = tribospin::egf_check(p->value, ys, terms, tol);
    const bool pgf_ok = tribospin::pgf_check(p->value, ys, terms, tol);
    nlohmann::json samples = nlohmann::json::array();
    for (double y : ys) {
      samples.push_back({{"y", y},
                         {"egf_closed", tribospin::to_json(tribospin::egf_closed_form(p->value, y))},
                         {"egf_series", tribospin::to_json(tribospin::egf_series(p->value, y, terms))}});
    }
    nlohmann::json doc;
    doc["ok"] = egf_ok && pgf_ok;
    doc["egf_ok"] = egf_ok;
    doc["pgf_ok"] = pgf_ok;
    doc["terms"] = terms;
    doc["samples"] = std::move(samples);
    *out_json = dup_string(doc.dump());
  });
}

ts_status ts_family_count(size_t* out_count) {
  if (ts_status st = require(out_count != nullptr, "null argument"); st != TS_OK) return st;
  return guarded([&] { *out_count = tribospin::family_registry().size(); });
}

ts_status ts_families_json(char** out_json) {
  if (ts_status st = require(out_json != nullptr, "null argument"); st != TS_OK) return st;
  return guarded([&] { *out_json = dup_string(tribospin::family_registry_json()); });
}

ts_status ts_verify(const char* family, long n_max, char** out_report_json, int* out_clean,
                    int* out_any_discrepant) {
  if (ts_status st = require(out_report_json != nullptr && out_clean != nullptr &&
                                 out_any_discrepant != nullptr,
                             "null argument");
      st != TS_OK)
    return st;
  return guarded([&] {
    std::optional<std::string> filter;
    if (family != nullptr) filter = std::string(family);
    const tribospin::VerificationReport report = tribospin::run_identity_suite(n_max, filter);
    *out_report_json = dup_string(tribospin::report_to_json(report).dump());
    *out_clean = report.matches_manifest ? 1 : 0;
    *out_any_discrepant = report.any_discrepant ? 1 : 0;
  });
}

ts_status ts_poly_params_create(const char* a, const char* b, const char* c, const char* r,
                                const char* s, const char* t, ts_poly_params** out) {
  if (ts_status st = require(out != nullptr, "output pointer is null"); st != TS_OK) return st;
  return guarded([&] {
    auto parse = [](const char* text, const char* what) {
      if (text == nullptr) throw tribospin::ParseError(std::string(what) + " is null");
      nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
      if (j.is_discarded())
        throw tribospin::ParseError(std::string(what) + " is not a JSON coefficient array");
      return tribospin::polynomial_from_json(j);
    };
    tribospin::PolySequenceParams p{parse(a, "a"), parse(b, "b"), parse(c, "c"),
                                    parse(r, "r"), parse(s, "s"), parse(t, "t")};
    *out = new ts_poly_params{std::move(p)};
  });
}

void ts_poly_params_free(ts_poly_params* p) { delete p; }

ts_status ts_poly_spinor(const ts_poly_params* p, long n, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr, "null argument"); st != TS_OK)
    return st;
  return guarded([&] {
    *out_json = dup_string(tribospin::to_json(tribospin::poly_spinor_term(p->value, n)).dump());
  });
}

ts_status ts_poly_spinor_eval(const ts_poly_params* p, long n, const char* x, char** out_json) {
  if (ts_status st = require(p != nullptr && out_json != nullptr && x != nullptr, "null argument");
      st != TS_OK)
    return st;
  return guarded([&] {
    const Rational point = Rational::parse(x);
    const tribospin::PolyHSpinor s = tribospin::poly_spinor_term(p->value, n);
    *out_json = dup_string(tribospin::to_json(tribospin::eval_spinor(s, point)).dump());
  });
}

}  // extern "C"
