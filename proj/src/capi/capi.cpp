#include "varembed/varembed.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/divfam.hpp"
#include "core/json_io.hpp"
#include "core/pell.hpp"
#include "core/poly_parse.hpp"
#include "core/variety.hpp"
#include "core/verify.hpp"
#include "core/witness.hpp"

struct ve_poly {
  varembed::Polynomial p;
};
struct ve_divfam {
  varembed::DivFamily f;
};
struct ve_variety {
  varembed::VarietyPresentation v;
};
struct ve_witness {
  varembed::EmbeddingWitness w;
};
struct ve_report {
  varembed::VerificationReport r;
};

namespace {

using varembed::Errc;

thread_local std::string g_last_error = "ok";

ve_status status_of(Errc code) {
  switch (code) {
    case Errc::ContextMismatch: return VE_ERR_CONTEXT_MISMATCH;
    case Errc::DivisionByZero: return VE_ERR_DIVISION_BY_ZERO;
    case Errc::NotDivisible: return VE_ERR_NOT_DIVISIBLE;
    case Errc::IncompletePoint: return VE_ERR_INCOMPLETE_POINT;
    case Errc::UnknownVariable: return VE_ERR_UNKNOWN_VARIABLE;
    case Errc::ParseError: return VE_ERR_PARSE;
    case Errc::InvalidPellPair: return VE_ERR_INVALID_PELL_PAIR;
    case Errc::NotPellCanonical: return VE_ERR_NOT_PELL_CANONICAL;
    case Errc::DegenerateConstants: return VE_ERR_DEGENERATE_CONSTANTS;
    case Errc::SizeLimitExceeded: return VE_ERR_SIZE_LIMIT;
    case Errc::DimensionTooSmall: return VE_ERR_DIMENSION_TOO_SMALL;
    case Errc::NotASolution: return VE_ERR_NOT_A_SOLUTION;
    case Errc::ZeroComponent: return VE_ERR_ZERO_COMPONENT;
    case Errc::NonconstantTj: return VE_ERR_NONCONSTANT_TJ;
    case Errc::IncompleteWitness: return VE_ERR_INCOMPLETE_WITNESS;
    case Errc::InvalidArgument: return VE_ERR_INVALID_ARGUMENT;
    case Errc::Internal: return VE_ERR_INTERNAL;
  }
  return VE_ERR_INTERNAL;
}

template <typename F>
ve_status guard(F&& f) {
  try {
    f();
    return VE_OK;
  } catch (const varembed::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return VE_ERR_OOM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VE_ERR_INTERNAL;
  }
}

ve_status fail_argument(const char* message) {
  g_last_error = message;
  return VE_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

varembed::Rational parse_constant(const char* text) {
  varembed::Polynomial p = varembed::parse_polynomial(text);
  if (!p.is_constant())
    throw varembed::Error(Errc::InvalidArgument,
                          std::string("constant expected, got '") + text + "'");
  return p.constant_value();
}

std::vector<varembed::Int> int_row(const int64_t* values, size_t count) {
  std::vector<varembed::Int> row;
  row.reserve(count);
  for (size_t i = 0; i < count; ++i)
    row.push_back(varembed::Int(static_cast<long>(values[i])));
  return row;
}

}  // namespace

extern "C" {

const char* ve_last_error(void) { return g_last_error.c_str(); }

void ve_string_free(char* s) { std::free(s); }

ve_status ve_poly_parse(const char* text, const char* const* vars,
                        size_t nvars, ve_poly** out) {
  if (!text || !out) return fail_argument("text and out must be non-NULL");
  if (nvars > 0 && !vars) return fail_argument("vars must be non-NULL");
  return guard([&] {
    varembed::Polynomial p =
        nvars == 0 ? varembed::parse_polynomial(text)
                   : varembed::parse_polynomial(
                         text, varembed::VarContext::make(std::vector<std::string>(
                                   vars, vars + nvars)));
    *out = new ve_poly{std::move(p)};
  });
}

ve_status ve_poly_format(const ve_poly* p, char** out) {
  if (!p || !out) return fail_argument("p and out must be non-NULL");
  return guard([&] { *out = dup_string(varembed::format_polynomial(p->p)); });
}

void ve_poly_free(ve_poly* p) { delete p; }

ve_status ve_pell_solution(const ve_poly* t, int64_t n, ve_poly** x_out,
                           ve_poly** y_out) {
  if (!t || !x_out || !y_out)
    return fail_argument("t, x_out and y_out must be non-NULL");
  return guard([&] {
    varembed::PellContext ctx(t->p);
    varembed::PellPair pair = varembed::solution(n, ctx);
    *x_out = new ve_poly{pair.x()};
    *y_out = new ve_poly{pair.y()};
  });
}

ve_status ve_pell_z(const ve_poly* t, int64_t n, ve_poly** z_out) {
  if (!t || !z_out) return fail_argument("t and z_out must be non-NULL");
  return guard([&] {
    varembed::PellContext ctx(t->p);
    varembed::PellPair pair = varembed::solution(n, ctx);
    *z_out = new ve_poly{varembed::z_component(pair, n, ctx)};
  });
}

ve_status ve_divfam_build(const char* const* constants, size_t n,
                          int allow_large, ve_divfam** out) {
  if (!constants || !out)
    return fail_argument("constants and out must be non-NULL");
  return guard([&] {
    std::vector<varembed::Rational> cs;
    cs.reserve(n);
    for (size_t i = 0; i < n; ++i) cs.push_back(parse_constant(constants[i]));
    varembed::DivFamOptions options{allow_large != 0};
    *out = new ve_divfam{varembed::build_families(cs, options)};
  });
}

ve_status ve_divfam_build_3k(size_t n, int allow_large, ve_divfam** out) {
  if (!out) return fail_argument("out must be non-NULL");
  return guard([&] {
    varembed::DivFamOptions options{allow_large != 0};
    *out = new ve_divfam{varembed::build_w_phat(n, options)};
  });
}

ve_status ve_divfam_to_json(const ve_divfam* fam, char** out) {
  if (!fam || !out) return fail_argument("fam and out must be non-NULL");
  return guard([&] { *out = dup_string(varembed::divfam_to_json(fam->f)); });
}

void ve_divfam_free(ve_divfam* fam) { delete fam; }

ve_status ve_variety_build_real(const ve_poly* q, ve_variety** out) {
  if (!q || !out) return fail_argument("q and out must be non-NULL");
  return guard([&] {
    *out = new ve_variety{varembed::build_real_variety(q->p)};
  });
}

ve_status ve_variety_build_complex(const ve_poly* q, int allow_large,
                                   ve_variety** out) {
  if (!q || !out) return fail_argument("q and out must be non-NULL");
  return guard([&] {
    varembed::DivFamOptions options{allow_large != 0};
    *out = new ve_variety{varembed::build_complex_variety(q->p, options)};
  });
}

ve_status ve_variety_to_json(const ve_variety* v, char** out) {
  if (!v || !out) return fail_argument("v and out must be non-NULL");
  return guard([&] { *out = dup_string(varembed::variety_to_json(v->v)); });
}

ve_status ve_variety_from_json(const char* text, ve_variety** out) {
  if (!text || !out) return fail_argument("text and out must be non-NULL");
  return guard([&] {
    *out = new ve_variety{varembed::variety_from_json(text)};
  });
}

void ve_variety_free(ve_variety* v) { delete v; }

ve_status ve_witness_build_real(const ve_poly* q, const int64_t* values,
                                size_t count, ve_witness** out) {
  if (!q || !values || !out)
    return fail_argument("q, values and out must be non-NULL");
  return guard([&] {
    *out = new ve_witness{varembed::real_witness(q->p, int_row(values, count))};
  });
}

ve_status ve_witness_build_complex(const ve_poly* q, const int64_t* values,
                                   size_t rows, size_t cols, int allow_large,
                                   ve_witness** out) {
  if (!q || !values || !out)
    return fail_argument("q, values and out must be non-NULL");
  return guard([&] {
    std::vector<std::vector<varembed::Int>> data;
    data.reserve(rows);
    for (size_t r = 0; r < rows; ++r)
      data.push_back(int_row(values + r * cols, cols));
    varembed::DivFamOptions options{allow_large != 0};
    *out = new ve_witness{varembed::complex_witness(q->p, data, options)};
  });
}

ve_status ve_witness_to_json(const ve_witness* w, char** out) {
  if (!w || !out) return fail_argument("w and out must be non-NULL");
  return guard([&] { *out = dup_string(varembed::witness_to_json(w->w)); });
}

ve_status ve_witness_from_json(const char* text, ve_witness** out) {
  if (!text || !out) return fail_argument("text and out must be non-NULL");
  return guard([&] {
    *out = new ve_witness{varembed::witness_from_json(text)};
  });
}

void ve_witness_free(ve_witness* w) { delete w; }

ve_status ve_verify(const ve_variety* v, const ve_witness* w, uint64_t seed,
                    ve_report** out) {
  if (!v || !w || !out) return fail_argument("v, w and out must be non-NULL");
  return guard([&] {
    *out = new ve_report{varembed::verify_witness(v->v, w->w, seed)};
  });
}

ve_status ve_report_to_json(const ve_report* r, char** out) {
  if (!r || !out) return fail_argument("r and out must be non-NULL");
  return guard([&] { *out = dup_string(varembed::report_to_json(r->r)); });
}

int ve_report_pass(const ve_report* r) { return r && r->r.pass ? 1 : 0; }

void ve_report_free(ve_report* r) { delete r; }

}  // extern "C"
