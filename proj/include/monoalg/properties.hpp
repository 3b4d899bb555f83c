#pragma once

// Seminormal, normal, Cohen-Macaulay, Buchsbaum and Gorenstein tests for
// simplicial semigroup rings, read off the decomposition over the frame.

#include <optional>
#include <vector>

#include "monoalg/decomposition.hpp"

namespace monoalg {

/// An element of B_A whose lambda-coordinates break the bound.
struct LambdaWitness {
  Point element;
  RatVector lambda;
};

struct LambdaResult {
  bool holds = true;
  std::optional<LambdaWitness> witness;
};

struct CohenMacaulayWitness {
  CosetLabel coset;
  Point shift;
  MonomialIdeal ideal;
};

struct CohenMacaulayResult {
  bool holds = true;
  std::optional<CohenMacaulayWitness> witness;
};

struct BuchsbaumWitness {
  enum class Kind {
    IdealNotUnitOrMaximal,  // some I_g is neither K[A] nor K[A]_+
    ShiftCollision,         // shift + generator lands on another shift of H
  };
  Kind kind = Kind::IdealNotUnitOrMaximal;
  CosetLabel coset;
  MonomialIdeal ideal;
  Point shift;
  Point generator;
  Point collision;
};

struct BuchsbaumResult {
  bool holds = true;
  std::optional<BuchsbaumWitness> witness;
};

struct GorensteinWitness {
  enum class Kind {
    NonUnitIdeal,
    NonUniqueTop,     // several shifts share the maximal coordinate sum
    MissingPartner,   // top - h_g is not a shift
  };
  Kind kind = Kind::NonUnitIdeal;
  CosetLabel coset;
  MonomialIdeal ideal;
  std::vector<Point> tops;
  Point element;
};

struct GorensteinResult {
  bool holds = true;
  std::optional<GorensteinWitness> witness;
};

struct PropertyReport {
  LambdaResult seminormal;
  LambdaResult normal;
  CohenMacaulayResult cohen_macaulay;
  BuchsbaumResult buchsbaum;
  GorensteinResult gorenstein;
};

// Each test throws NotSimplicial through decompose(); the overloads taking a
// Decomposition reuse a decomposition of the same semigroup.

LambdaResult is_seminormal(const Decomposition& d);
LambdaResult is_normal(const Decomposition& d);
CohenMacaulayResult is_cohen_macaulay(const Decomposition& d);
BuchsbaumResult is_buchsbaum(const AffineSemigroup& b, const Decomposition& d);
GorensteinResult is_gorenstein(const Decomposition& d);
PropertyReport full_report(const AffineSemigroup& b, const Decomposition& d);

LambdaResult is_seminormal(const AffineSemigroup& b);
LambdaResult is_normal(const AffineSemigroup& b);
CohenMacaulayResult is_cohen_macaulay(const AffineSemigroup& b);
BuchsbaumResult is_buchsbaum(const AffineSemigroup& b);
GorensteinResult is_gorenstein(const AffineSemigroup& b);
PropertyReport full_report(const AffineSemigroup& b);

}  // namespace monoalg
