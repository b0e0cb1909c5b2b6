#pragma once

#include <string>

#include "atom.hpp"
#include "bracket.hpp"
#include "minimality.hpp"

namespace knotcert {

// All reports serialize as compact key-sorted JSON so that repeated runs are
// byte-identical and machine-diffable.

std::string certificate_json(const Certificate& c);

// {"E":..,"F_black":..,"F_white":..,"V":..,"chi":..,"genus":..,"good":..,
//  "orientable":..,"witnesses":[..]}
std::string atom_report_json(const Atom& a);

// {"bound":..,"chi":..,"equality":..,"n":..,"span":..}
std::string span_report_json(const SpanReport& r);

// {"polynomial":..} merged into the span report for the bracket command
std::string bracket_report_json(const SpanReport& r, const LaurentPoly& p);

std::string move_sites_json(const MoveSites& m);

std::string cabling_report_json(const CablingReport& r);

std::string info_json(const Diagram& d);

}  // namespace knotcert
