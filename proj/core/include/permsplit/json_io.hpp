#pragma once

#include <json.hpp>

#include "permsplit/lpm.hpp"
#include "permsplit/matroid.hpp"
#include "permsplit/perm.hpp"
#include "permsplit/polytope.hpp"
#include "permsplit/rational.hpp"
#include "permsplit/splits.hpp"
#include "permsplit/subdivision.hpp"

namespace permsplit {

using Json = nlohmann::ordered_json;

// Readers throw ParseError for malformed documents and DomainError when the
// document is well formed but describes an invalid object.

Json subset_to_json(Subset s);
Subset subset_from_json(const Json& j);

Json permutation_to_json(const Permutation& p);  // "2413"
Permutation permutation_from_json(const Json& j, int n = 0);

Json interval_to_json(const BruhatInterval& interval);  // {"lo", "hi"}
BruhatInterval interval_from_json(const Json& j);

/// {"n": int, "bases": [[int, ...], ...]}
Json matroid_to_json(const SetMatroid& m);
SetMatroid matroid_from_json(const Json& j);

/// {"n": int, "U": [...], "L": [...]}
Json lpm_to_json(const LatticePathMatroid& m);
LatticePathMatroid lpm_from_json(const Json& j);

/// {"n": int, "constituents": [lpm, ...]}
Json flag_to_json(const LPFMFlag& flag);
LPFMFlag flag_from_json(const Json& j);

/// Array of rows of "p/q" strings.
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json rational_to_json(const Rational& q);  // integer when integral, "p/q" otherwise
Rational rational_from_json(const Json& j);

Json point_to_json(const RationalPoint& p);  // array of "p/q" strings
RationalPoint point_from_json(const Json& j);

/// {"S": [...], "sense": ">=" | "<=" | "=", "level": "p/q"}
Json constraint_to_json(const LinearConstraint& c);
LinearConstraint constraint_from_json(const Json& j);

/// {"S": [...], "alpha": int}
Json hyperplane_to_json(const SplitHyperplane& h);
SplitHyperplane hyperplane_from_json(const Json& j, int n);

Json split_report_to_json(const SplitHyperplane& h, const SplitReport& report);

/// {"n", "hyperplanes", "cells": [{"signs", "lo", "hi", "lpfm"}]}
Json subdivision_to_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);

/// {"n", "elements": [subdivision + "id"], "covers": [[coarser, finer], ...]}
Json poset_to_json(const SubdivisionPoset& poset);
SubdivisionPoset poset_from_json(const Json& j);

}  // namespace permsplit
