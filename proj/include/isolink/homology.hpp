#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "isolink/complexes.hpp"
#include "isolink/errors.hpp"

namespace isolink {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer matrix with exact arbitrary-precision entries.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    /// Zero when the entry is absent.
    Int at(int r, int c) const;
    void set(int r, int c, Int value);
    void add(int r, int c, const Int& value);
    const std::map<int, Int>& row(int r) const { return data_[r]; }
    long long nonzero_count() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::map<int, Int>> data_;
};

struct SmithResult {
    /// Positive invariant factors d_1 | d_2 | ... | d_r.
    std::vector<Int> invariant_factors;
    int rank = 0;
};

/// Smith normal form by unimodular row/column operations with a deterministic
/// pivot rule: smallest nonzero absolute value, ties broken by (row, column).
SmithResult smith_normal_form(IntegerMatrix m);

struct DegreeHomology {
    long long betti = 0;
    std::vector<Int> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    bool operator==(const DegreeHomology& other) const {
        return betti == other.betti && torsion == other.torsion;
    }
};

/// Integral homology per degree (index = degree; trailing trivial degrees kept).
struct HomologyResult {
    std::vector<DegreeHomology> degrees;

    long long betti(int d) const;
    std::vector<Int> torsion(int d) const;
    bool all_trivial() const;
    /// Reduced version: degree 0 betti lowered by one when nonempty.
    long long reduced_betti(int d, bool empty_complex) const;
};

/// A finitely generated chain complex: dims[k] = rank of C_k and
/// boundaries[k-1] is the matrix of C_k -> C_{k-1} for k = 1..dims.size()-1.
struct ChainComplexData {
    std::vector<long long> dims;
    std::vector<IntegerMatrix> boundaries;
};

HomologyResult homology_of_chain_complex(const ChainComplexData& cc);

/// Simplicial chain complex with the orientation induced by sorted vertex ids.
ChainComplexData chain_complex_of(const SimplicialComplex& k);
HomologyResult homology_of(const SimplicialComplex& k);

/// Matrix of the induced chain map in one degree (degenerate images drop out).
IntegerMatrix chain_map_matrix(const SimplicialComplex& x, const SimplicialComplex& y,
                               const std::vector<int>& vertex_map, int degree);

/// Number of connected components (0 for the empty complex).
int component_count(const SimplicialComplex& k);

/// Integer extended with +/- infinity. Addition follows the absorbing
/// convention (+inf) + x = +inf, then (-inf) + x = -inf.
struct ExtInt {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    long long value = 0;

    static ExtInt infinity() { return ExtInt{Kind::PosInf, 0}; }
    static ExtInt negative_infinity() { return ExtInt{Kind::NegInf, 0}; }
    static ExtInt finite(long long v) { return ExtInt{Kind::Finite, v}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const ExtInt& o) const {
        return kind == o.kind && (kind != Kind::Finite || value == o.value);
    }
    bool operator!=(const ExtInt& o) const { return !(*this == o); }
    bool operator<(const ExtInt& o) const;
    bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }
    std::string to_string() const;
};

ExtInt ext_add(const ExtInt& a, const ExtInt& b);
ExtInt ext_add(const ExtInt& a, long long b);
/// Parses "inf", "-inf" or a decimal integer.
ExtInt parse_ext(const std::string& text);

/// A connectivity estimate. The caveat flag marks values that rely on
/// homology above degree 0 (fundamental-group data is not computed).
struct Connectivity {
    ExtInt value;
    bool homological_caveat = false;

    bool operator==(const Connectivity& o) const {
        return value == o.value && homological_caveat == o.homological_caveat;
    }
};

/// Space connectivity: -2 for empty, -1 for disconnected, otherwise the
/// largest k with vanishing reduced homology through degree k (+inf when
/// acyclic through the full dimension).
Connectivity connectivity_of(const SimplicialComplex& k);

/// Map connectivity from exact component data plus the algebraic mapping
/// cone: (least degree with nonvanishing cone homology) - 1; +inf when the
/// cone is acyclic. Empty domain with nonempty target gives -1; empty to
/// empty gives +inf.
Connectivity map_connectivity(const SimplicialComplex& x, const SimplicialComplex& y,
                              const std::vector<int>& vertex_map);

/// A strictly commuting square of simplicial maps z->x, z->y, x->w, y->w.
struct CommutingSquare {
    SimplicialComplex z, x, y, w;
    std::vector<int> z_to_x, z_to_y, x_to_w, y_to_w;
};

/// True when the chain-level double mapping cylinder of x <- z -> y maps to w
/// by a quasi-isomorphism (the square is homologically cocartesian).
/// Throws NonCommuting when the square does not commute on the nose.
bool pushout_cone_check(const CommutingSquare& square);

} // namespace isolink
