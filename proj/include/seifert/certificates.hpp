/*
   Copyright 2026 The seifert-forms Authors

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

#pragma once

#include <seifert/seifert_form.hpp>

#include <string>

namespace seifert {

enum class SubgroupKind { AlexanderTrivial, Isotropic, Metabolizer };

const char* to_string(SubgroupKind kind);
SubgroupKind subgroup_kind_from_string(const std::string& s);

struct SubgroupCertificate {
    SubgroupKind kind = SubgroupKind::AlexanderTrivial;
    IntMatrix basis;       // dim x rank, columns span the subgroup
    IntMatrix restricted;  // basis^T M basis
    bool verified = false;
    std::string reason;    // empty when verified

    std::size_t rank() const noexcept { return basis.cols(); }
};

// lexicographic order on the row-major entries, shapes first
bool basis_less(const IntMatrix& a, const IntMatrix& b);

SubgroupCertificate verify_alexander_trivial(const SeifertForm& f, const IntMatrix& basis);
SubgroupCertificate verify_isotropic(const SeifertForm& f, const IntMatrix& basis);
// isotropic of rank dim/2
SubgroupCertificate verify_metabolizer(const SeifertForm& f, const IntMatrix& basis);
SubgroupCertificate verify(const SeifertForm& f, SubgroupKind kind, const IntMatrix& basis);

// [[M, v, 0], [v^T, 0, 1], [0, 0, 0]]
SeifertForm stabilize(const SeifertForm& f, const std::vector<Integer>& v);
// certificate of f lifted to stabilize(f, v): the two new basis vectors are appended
SubgroupCertificate lift_through_stabilization(const SeifertForm& stabilized, const SubgroupCertificate& cert);

// stabilization of M + sign*e11 by a column carrying -sign in the first row
// and the 0/1 corner block; it is congruent to the same pattern built on M
SeifertForm crossing_change_move(const SeifertForm& f, int sign);
// certificate of the original form carried to crossing_change_move(f, sign)
SubgroupCertificate lift_through_crossing_change(const SeifertForm& moved, const SubgroupCertificate& cert);

struct NormalForm {
    IntMatrix N;
    IntMatrix result;     // [[0, 1+P], [P^T, 0]]
    IntMatrix transform;  // [[1, -N^T], [0, 1]]; result = transform^T B transform
};

// B = [[0, 1+P], [P^T, Q]] with P strictly upper triangular; solves Q = N + NP + (NP)^T
NormalForm normal_form_alex_trivial(const IntMatrix& B);

// unimodular T with T^T V T = [[0, 1+P], [P^T, Q]], P strictly upper triangular,
// for any square V with det(tV - V^T) a unit; throws ShapeError otherwise
IntMatrix standard_shape_transform(const IntMatrix& V);

// the rank-k isotropic part of a rank-2k Alexander-trivial certificate
SubgroupCertificate isotropic_from_alexander_trivial(const SeifertForm& f, const SubgroupCertificate& cert);

// rank-2 Alexander-trivial subgroup of a metabolic 4x4 form with unit determinant
SubgroupCertificate metabolic_4x4_reduce(const SeifertForm& f, const SubgroupCertificate& metabolizer);

} // namespace seifert
