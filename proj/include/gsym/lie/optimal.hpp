#pragma once

#include "gsym/lie/adjoint.hpp"

#include <string>
#include <variant>
#include <vector>

namespace gsym::lie {

class ZeroElement : public Error {
public:
    ZeroElement() : Error("cannot classify the zero element") {}
};

using Scalar = std::variant<Rational, double>;

double to_double(const Scalar& s);
std::string str(const Scalar& s);

/// v -> Ad(exp(eps e_generator)) v
struct Conjugate {
    std::size_t generator;
    Scalar eps;
};

/// v -> lambda v
struct Scale {
    Scalar lambda;
};

using Step = std::variant<Conjugate, Scale>;

struct Witness {
    std::vector<Step> steps;

    bool exact() const;
    std::string str(const std::vector<std::string>& labels) const;
};

/// The seven families of one-dimensional subalgebras.
enum class ClassId { X1, X2, X3, X3_minus_X1, X3_plus_X1, aX2_plus_X3, aX1_plus_bX2_plus_X4 };

std::string class_name(ClassId id);

struct Classification {
    ClassId id;
    Rational a;  // aX2+X3 and aX1+bX2+X4
    Rational b;  // aX1+bX2+X4
    Witness witness;
    /// Canonical representative (exact). With normalize_case1 the e2
    /// coefficient is real and only numeric_representative carries it.
    Vec representative;
    NumVec numeric_representative;
    double b_numeric = 0.0;

    std::string str() const;
};

struct ClassifyOptions {
    /// After the aX1+bX2+X4 reduction, also rescale by the X2 flow so that a
    /// lands in {-1, 0, 1}. The resulting witness is then inexact.
    bool normalize_case1 = false;
};

/// Case analysis on (a1..a4) for the four-dimensional symmetry algebra with
/// basis (X1, X2, X3, X4): ad(X1) nilpotent, ad(X2) diagonal, X3 central.
/// The conjugation parameters are solved from the adjoint maps of L.
Classification classify(const Vec& v, const LieAlgebra& L, const ClassifyOptions& options = {});

/// Exact replay; throws NotExponentiable if a step is not rational.
Vec apply_witness(const Witness& w, const Vec& v, const LieAlgebra& L);
NumVec apply_witness_numeric(const Witness& w, const NumVec& v, const LieAlgebra& L);

NumVec to_numeric(const Vec& v);

}  // namespace gsym::lie
