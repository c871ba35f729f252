/*
   Copyright 2026 the quintic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QUINTIC_CENSUS_HPP
#define QUINTIC_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "quintic/hessian.hpp"
#include "quintic/pencil.hpp"

namespace quintic {

// Coordinate multiplicity pattern: 1..4 parts, non-increasing, summing to n+2.
struct Pattern {
    std::vector<int> parts;
    bool operator==(const Pattern&) const = default;
    std::string to_string() const;
};

// All patterns for dimension n, largest part first then lexicographically
// descending (the canonical case order).
std::vector<Pattern> enumerate_patterns(int n);

enum class BranchKind {
    Isolated,       // concrete values, one specific parameter (with conjugates)
    GenericFixed,   // concrete values, singular for every parameter
    GenericFamily,  // one free value linked to the parameter by a constraint
    LineFamily,     // free value survives at a fixed parameter: singular lines
    Dim2Family,     // two free values at a fixed parameter (4 equal parts)
};

struct Branch {
    BranchKind kind{};
    Pattern pattern;
    int n = 0;
    int dimension = 0;

    // concrete values (Isolated, GenericFixed); field null for rational values
    FieldPtr field;
    std::vector<FieldElement> values;
    FieldElement lambda;  // Isolated only
    PencilParam param;    // Isolated / LineFamily / Dim2Family

    // parametric slot values, linear in the free value c (families)
    std::vector<RatPoly> forms;
    RatPoly constr_alpha, constr_beta;  // GenericFamily: U(c) alpha + V(c) beta = 0

    Int orbit_length;          // points per orbit (dim 0) or number of lines (dim 1)
    int conj_degree = 1;       // field degree d over Q
    int lambda_degree = 1;     // e = deg minpoly(lambda)
    int stabilizer_order = 1;  // |H|: automorphisms fixing value multiset (and lambda)
    int orbits_per_param = 1;  // conjugate orbits living at one parameter
    int param_count = 1;       // distinct conjugate parameters (Isolated)
    int family_orbits = 1;     // GenericFamily: orbits at a non-exceptional parameter

    RatPoly det_beta;    // GenericFixed: Hessian determinant as polynomial in beta
    RatPoly det_family;  // GenericFamily: Hessian determinant numerator in c

    std::string signature;  // canonical multiset key for deduplication
    std::string rep_string() const;
};

// A solution discarded because two values coincided; it must reappear under
// the coarser pattern obtained by merging them.
struct CollapseEvent {
    Pattern pattern;
    Pattern merged;
    std::vector<FieldElement> merged_values;
    std::vector<int> merged_mults;
    bool lambda_known = false;
    FieldElement lambda;
    bool verified = false;
};

struct SolveResult {
    std::vector<Branch> branches;
    std::vector<CollapseEvent> collapses;
    std::vector<std::string> errors;
};

SolveResult solve_pattern(int n, const Pattern& pattern);

// (n+2)! / prod m_k! / s with s the number of scalars mapping the value
// multiset onto itself
Int orbit_length(int n, const std::vector<int>& mults, const std::vector<FieldElement>& values);

// number of distinct lines swept by a one-parameter family
Int line_count(int n, const std::vector<int>& mults, const std::vector<RatPoly>& forms);

struct OrbitInstance {
    BranchKind kind{};
    Pattern pattern;
    std::string representative;
    Int length;
    int orbit_count = 1;
    NodeStatus status = NodeStatus::Unverified;
    std::string note;
};

struct ParamTotal {
    PencilParam param;
    Int node_total;
    std::vector<OrbitInstance> orbits;
    bool exceptional = false;
};

struct CensusReport {
    int n = 0;
    std::vector<Pattern> patterns;
    std::vector<Branch> generic;   // GenericFixed and GenericFamily branches
    std::vector<Branch> lines;     // LineFamily and Dim2Family branches
    std::vector<Branch> isolated;  // additional orbits at specific parameters
    std::vector<PencilParam> exceptional;
    std::vector<ParamTotal> additional;     // candidate (non-exceptional) parameters
    std::vector<ParamTotal> at_exceptional; // detail at the exceptional parameters
    std::optional<ParamTotal> best;
    Int generic_node_total;  // generic node count at a non-exceptional parameter
    std::vector<CollapseEvent> collapses;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;
};

// Full census for dimension n (patterns, branches, exceptional values, node
// certification, best parameter). Set threads > 1 to solve patterns
// concurrently; the report is assembled in canonical order either way.
CensusReport census(int n, int threads = 1);

// node totals and per-orbit statuses at one specific parameter
ParamTotal evaluate_param(const CensusReport& report, const PencilParam& p);

// Canonical grouping key. Conjugate algebraic parameters carry conjugate
// (hence identical-looking) orbit data and are bundled under one key, the
// minimal polynomial of beta/alpha.
std::string param_key(const PencilParam& p);

}  // namespace quintic

#endif
