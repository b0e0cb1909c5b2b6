#include "knotcert.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "atom.hpp"
#include "bracket.hpp"
#include "diagram.hpp"
#include "minimality.hpp"
#include "report.hpp"

using namespace knotcert;

struct kc_diagram {
  Diagram d;
};
struct kc_long_diagram {
  LongDiagram ld;
};

namespace {

thread_local std::string t_last_error;

template <typename F>
kc_error guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    t_last_error = e.what();
    return KC_ERROR_PARSE;
  } catch (const TooLargeError& e) {
    t_last_error = e.what();
    return KC_ERROR_LIMIT;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return KC_ERROR_INVALID;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return KC_ERROR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return KC_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

BracketOptions options_for(int limit) {
  BracketOptions o;
  if (limit > 0) o.limit = static_cast<std::size_t>(limit);
  return o;
}

kc_error invalid_args() {
  t_last_error = "null argument";
  return KC_ERROR_INVALID;
}

}  // namespace

extern "C" {

const char* kc_version(void) { return "0.1.0"; }

const char* kc_last_error(void) { return t_last_error.c_str(); }

void kc_string_free(char* s) { std::free(s); }

kc_error kc_parse_pd(const char* text, kc_diagram** out) {
  if (!text || !out) return invalid_args();
  return guarded([&] {
    *out = new kc_diagram{parse_pd(text)};
    return KC_OK;
  });
}

kc_error kc_parse_gauss(const char* text, kc_diagram** out) {
  if (!text || !out) return invalid_args();
  return guarded([&] {
    *out = new kc_diagram{parse_gauss(text)};
    return KC_OK;
  });
}

kc_error kc_parse_braid(const char* text, int strands, kc_diagram** out) {
  if (!text || !out) return invalid_args();
  return guarded([&] {
    *out = new kc_diagram{braid_closure(BraidWord::parse(text, strands))};
    return KC_OK;
  });
}

void kc_diagram_free(kc_diagram* d) { delete d; }

kc_error kc_crossing_count(const kc_diagram* d, size_t* out) {
  if (!d || !out) return invalid_args();
  *out = d->d.crossing_count();
  return KC_OK;
}

kc_error kc_component_count(const kc_diagram* d, size_t* out) {
  if (!d || !out) return invalid_args();
  *out = d->d.component_count();
  return KC_OK;
}

kc_error kc_is_knot(const kc_diagram* d, int* out) {
  if (!d || !out) return invalid_args();
  *out = d->d.is_knot() ? 1 : 0;
  return KC_OK;
}

kc_error kc_is_classical(const kc_diagram* d, int* out) {
  if (!d || !out) return invalid_args();
  *out = d->d.is_classical() ? 1 : 0;
  return KC_OK;
}

kc_error kc_writhe(const kc_diagram* d, int* out) {
  if (!d || !out) return invalid_args();
  *out = d->d.writhe();
  return KC_OK;
}

kc_error kc_serialize_pd(const kc_diagram* d, char** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    *out = dup_string(serialize_pd(d->d));
    return KC_OK;
  });
}

kc_error kc_mirror(const kc_diagram* d, kc_diagram** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    *out = new kc_diagram{mirror(d->d)};
    return KC_OK;
  });
}

kc_error kc_cable(const kc_diagram* d, int k, kc_diagram** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    *out = new kc_diagram{cable(d->d, k)};
    return KC_OK;
  });
}

kc_error kc_connected_sum(const kc_diagram* d1, unsigned arc1, const kc_diagram* d2,
                          unsigned arc2, kc_diagram** out) {
  if (!d1 || !d2 || !out) return invalid_args();
  return guarded([&] {
    *out = new kc_diagram{connected_sum(d1->d, arc1, d2->d, arc2)};
    return KC_OK;
  });
}

kc_error kc_info_json(const kc_diagram* d, char** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    *out = dup_string(info_json(d->d));
    return KC_OK;
  });
}

kc_error kc_atom_report_json(const kc_diagram* d, char** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    *out = dup_string(atom_report_json(build_atom(d->d)));
    return KC_OK;
  });
}

kc_error kc_bracket(const kc_diagram* d, int limit, char** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    *out = dup_string(kauffman_bracket(d->d, options_for(limit)).to_string());
    return KC_OK;
  });
}

kc_error kc_bracket_report_json(const kc_diagram* d, int limit, char** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    auto opts = options_for(limit);
    LaurentPoly p = kauffman_bracket(d->d, opts);
    SpanReport r = span_bound_report(d->d, opts);
    *out = dup_string(bracket_report_json(r, p));
    return KC_OK;
  });
}

kc_error kc_certificate_json(const kc_diagram* d, const char* category, int limit, char** out) {
  if (!d || !category || !out) return invalid_args();
  return guarded([&] {
    std::string cat = category;
    Certificate c;
    if (cat == "classical")
      c = certify_classical(d->d, options_for(limit));
    else if (cat == "framed")
      c = certify_framed(d->d, options_for(limit));
    else
      throw std::invalid_argument("unknown category '" + cat + "' (expected classical or framed)");
    *out = dup_string(certificate_json(c));
    return KC_OK;
  });
}

kc_error kc_detect_moves_json(const kc_diagram* d, char** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    *out = dup_string(move_sites_json(detect_reducing_moves(d->d)));
    return KC_OK;
  });
}

kc_error kc_cabling_report_json(const kc_diagram* d, int m, int limit, char** out) {
  if (!d || !out) return invalid_args();
  return guarded([&] {
    *out = dup_string(cabling_report_json(cabling_consistency(d->d, m, options_for(limit))));
    return KC_OK;
  });
}

kc_error kc_parse_long_pd(const char* text, kc_long_diagram** out) {
  if (!text || !out) return invalid_args();
  return guarded([&] {
    *out = new kc_long_diagram{parse_long_pd(text)};
    return KC_OK;
  });
}

void kc_long_diagram_free(kc_long_diagram* ld) { delete ld; }

kc_error kc_long_closure(const kc_long_diagram* ld, kc_diagram** out) {
  if (!ld || !out) return invalid_args();
  return guarded([&] {
    *out = new kc_diagram{closure(ld->ld)};
    return KC_OK;
  });
}

kc_error kc_long_certificate_json(const kc_long_diagram* ld, int limit, char** out) {
  if (!ld || !out) return invalid_args();
  return guarded([&] {
    *out = dup_string(certificate_json(certify_long(ld->ld, options_for(limit))));
    return KC_OK;
  });
}

}  // extern "C"
