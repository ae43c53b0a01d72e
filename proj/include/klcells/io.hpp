#pragma once

#include <string>

#include <json.hpp>

#include "klcells/cells.hpp"
#include "klcells/crystal.hpp"
#include "klcells/polynomial.hpp"
#include "klcells/report.hpp"
#include "klcells/tableau.hpp"

namespace klcells {

using Json = nlohmann::json;

/// {"rows": [[...], ...], "inner": [...]}; "inner" only for skew tableaux.
Json to_json(const Tableau& t);
/// Accepts the object form or a bare array of rows.  Throws InputError.
Tableau tableau_from_json(const Json& j);
Tableau parse_tableau(const std::string& text);

Json to_json(const Permutation& w);
Json to_json(const IntPolynomial& p);
Json to_json(const CrystalWord& b);

/// {"side", "n", "cells": [[w, ...], ...], "order": [[a, b], ...]} with
/// [a, b] listing every pair of distinct cells with a <= b.
Json to_json(const CellPartition& p, int n);
Json to_json(const CellGraph& g);
Json to_json(const CrystalGraph& g);
Json to_json(const Report& r);

std::string to_dot(const CellGraph& g);
std::string to_dot(const CrystalGraph& g);

/// Multi-line human-readable report.
std::string report_text(const Report& r);

}  // namespace klcells
