// Graded free modules, homogeneous matrices between them, and modules
// presented as cokernels.  Everything is degreewise-finite, so each operation
// reduces to exact linear algebra on the graded pieces.
#ifndef FOURPOINTS_GRADED_HPP
#define FOURPOINTS_GRADED_HPP

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourpoints/mat.hpp"
#include "fourpoints/ring.hpp"

namespace fourpoints {

/// Direct sum of twists: generator i spans a copy of ring(-gens[i]).
struct FreeGraded {
    RingId ring = RingId::R();
    std::vector<int> gens;

    std::size_t count() const { return gens.size(); }

    std::size_t piece_dim(int d) const
    {
        std::size_t n = 0;
        for (int g : gens) n += ring_dim(ring, d - g);
        return n;
    }

    /// Offset of each generator's block inside the degree-d coordinate vector.
    std::vector<std::size_t> piece_offsets(int d) const
    {
        std::vector<std::size_t> off(gens.size() + 1, 0);
        for (std::size_t i = 0; i < gens.size(); ++i)
            off[i + 1] = off[i] + ring_dim(ring, d - gens[i]);
        return off;
    }

    FreeGraded twist(int n) const
    {
        FreeGraded f{ring, gens};
        for (int& g : f.gens) g -= n;
        return f;
    }

    FreeGraded dual() const
    {
        FreeGraded f{ring, gens};
        for (int& g : f.gens) g = -g;
        return f;
    }

    int min_gen() const
    {
        int m = std::numeric_limits<int>::max();
        for (int g : gens) m = std::min(m, g);
        return gens.empty() ? 0 : m;
    }
    int max_gen() const
    {
        int m = std::numeric_limits<int>::min();
        for (int g : gens) m = std::max(m, g);
        return gens.empty() ? 0 : m;
    }

    bool operator==(const FreeGraded& o) const { return ring == o.ring && gens == o.gens; }
};

/// Element of a graded free module: one polynomial per generator.
using FreeColumn = std::vector<Poly>;

/// Coordinates of a homogeneous degree-d element on the monomial basis.
inline std::vector<Fp> column_coords(const FreeGraded& F, const FreeColumn& col, int d)
{
    if (col.size() != F.count()) throw std::invalid_argument("column_coords: length mismatch");
    std::vector<Fp> v;
    v.reserve(F.piece_dim(d));
    for (std::size_t i = 0; i < F.count(); ++i) {
        const int dd = d - F.gens[i];
        if (dd < 0) {
            if (!col[i].is_zero()) throw std::invalid_argument("column_coords: component below generator degree");
            continue;
        }
        std::vector<Fp> part = coeff_vector(F.ring, col[i], dd);
        v.insert(v.end(), part.begin(), part.end());
    }
    return v;
}

inline FreeColumn column_from_coords(const FreeGraded& F, const std::vector<Fp>& v, int d)
{
    FreeColumn col(F.count());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < F.count(); ++i) {
        const int dd = d - F.gens[i];
        if (dd < 0) continue;
        std::vector<Monomial> basis = ring_basis(F.ring, dd);
        for (const Monomial& m : basis) col[i].add_term(m, v[pos++]);
    }
    if (pos != v.size()) throw std::invalid_argument("column_from_coords: length mismatch");
    return col;
}

/// Homogeneous matrix between graded free modules over one ring; entry (i,j)
/// has degree src.gens[j] - tgt.gens[i] (zero allowed, forced when negative).
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(FreeGraded src, FreeGraded tgt, std::vector<std::vector<Poly>> entries)
        : src_(std::move(src)), tgt_(std::move(tgt)), e_(std::move(entries))
    {
        if (src_.ring != tgt_.ring) throw std::invalid_argument("GradedMap: mixed rings");
        if (e_.size() != tgt_.count()) throw std::invalid_argument("GradedMap: row count mismatch");
        for (std::size_t i = 0; i < tgt_.count(); ++i) {
            if (e_[i].size() != src_.count()) throw std::invalid_argument("GradedMap: column count mismatch");
            for (std::size_t j = 0; j < src_.count(); ++j) {
                Poly nf = normal_form(ring(), e_[i][j]);
                const int want = src_.gens[j] - tgt_.gens[i];
                if (!nf.is_zero() && nf.homogeneous_degree() != want)
                    throw std::invalid_argument("GradedMap: entry (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") is not homogeneous of degree " +
                                                std::to_string(want));
                e_[i][j] = std::move(nf);
            }
        }
    }

    static GradedMap zero(FreeGraded src, FreeGraded tgt)
    {
        std::vector<std::vector<Poly>> e(tgt.count(), std::vector<Poly>(src.count()));
        return GradedMap(std::move(src), std::move(tgt), std::move(e));
    }

    static GradedMap identity(const FreeGraded& F)
    {
        std::vector<std::vector<Poly>> e(F.count(), std::vector<Poly>(F.count()));
        for (std::size_t i = 0; i < F.count(); ++i) e[i][i] = Poly(1);
        return GradedMap(F, F, std::move(e));
    }

    const RingId& ring() const { return src_.ring; }
    const FreeGraded& src() const { return src_; }
    const FreeGraded& tgt() const { return tgt_; }
    const Poly& entry(std::size_t i, std::size_t j) const { return e_[i][j]; }
    const std::vector<std::vector<Poly>>& entries() const { return e_; }

    bool is_zero() const
    {
        for (const auto& row : e_)
            for (const Poly& f : row)
                if (!f.is_zero()) return false;
        return true;
    }

    GradedMap twist(int n) const { return GradedMap(src_.twist(n), tgt_.twist(n), e_); }

    /// Transpose with dualized twists: Hom(-, ring) applied to the map.
    GradedMap transpose_dual() const
    {
        std::vector<std::vector<Poly>> e(src_.count(), std::vector<Poly>(tgt_.count()));
        for (std::size_t i = 0; i < tgt_.count(); ++i)
            for (std::size_t j = 0; j < src_.count(); ++j) e[j][i] = e_[i][j];
        return GradedMap(tgt_.dual(), src_.dual(), std::move(e));
    }

    friend GradedMap compose(const GradedMap& a, const GradedMap& b)
    {
        if (!(b.tgt_ == a.src_)) throw std::invalid_argument("compose: shapes do not match");
        std::vector<std::vector<Poly>> e(a.tgt_.count(), std::vector<Poly>(b.src_.count()));
        for (std::size_t i = 0; i < a.tgt_.count(); ++i)
            for (std::size_t j = 0; j < b.src_.count(); ++j) {
                Poly s;
                for (std::size_t k = 0; k < a.src_.count(); ++k) s += a.e_[i][k] * b.e_[k][j];
                e[i][j] = normal_form(a.ring(), s);
            }
        return GradedMap(b.src_, a.tgt_, std::move(e));
    }

    GradedMap operator-(const GradedMap& o) const
    {
        if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) throw std::invalid_argument("GradedMap: shape mismatch");
        std::vector<std::vector<Poly>> e(tgt_.count(), std::vector<Poly>(src_.count()));
        for (std::size_t i = 0; i < tgt_.count(); ++i)
            for (std::size_t j = 0; j < src_.count(); ++j) e[i][j] = e_[i][j] - o.e_[i][j];
        return GradedMap(src_, tgt_, std::move(e));
    }

    FreeColumn apply(const FreeColumn& col) const
    {
        if (col.size() != src_.count()) throw std::invalid_argument("GradedMap::apply: length mismatch");
        FreeColumn out(tgt_.count());
        for (std::size_t i = 0; i < tgt_.count(); ++i) {
            Poly s;
            for (std::size_t j = 0; j < src_.count(); ++j) s += e_[i][j] * col[j];
            out[i] = normal_form(ring(), s);
        }
        return out;
    }

    FreeColumn column(std::size_t j) const
    {
        FreeColumn c(tgt_.count());
        for (std::size_t i = 0; i < tgt_.count(); ++i) c[i] = e_[i][j];
        return c;
    }

    /// Scalar matrix of the induced map on degree-d pieces.
    Mat degree_block(int d) const
    {
        const std::size_t rows = tgt_.piece_dim(d);
        const std::size_t cols = src_.piece_dim(d);
        Mat block(rows, cols);
        std::vector<std::size_t> roff = tgt_.piece_offsets(d);
        std::vector<std::size_t> coff = src_.piece_offsets(d);
        for (std::size_t i = 0; i < tgt_.count(); ++i)
            for (std::size_t j = 0; j < src_.count(); ++j) {
                if (e_[i][j].is_zero()) continue;
                const int sd = d - src_.gens[j];
                if (sd < 0) continue;
                Mat m = mult_matrix(ring(), e_[i][j], sd);
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c) block(roff[i] + r, coff[j] + c) = m(r, c);
            }
        return block;
    }

    /// Every entry lies in the irrelevant ideal (no unit entries).
    bool is_minimal() const
    {
        for (const auto& row : e_)
            for (const Poly& f : row)
                if (!f.is_zero() && f.homogeneous_degree() == 0) return false;
        return true;
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < tgt_.count(); ++i) {
            s += i == 0 ? "[ " : "  ";
            for (std::size_t j = 0; j < src_.count(); ++j) {
                s += e_[i][j].str();
                if (j + 1 < src_.count()) s += ", ";
            }
            s += i + 1 < tgt_.count() ? "\n" : " ]";
        }
        return s;
    }

private:
    FreeGraded src_, tgt_;
    std::vector<std::vector<Poly>> e_;
};

/// Module given as coker(presentation: F1 -> F0).
struct PresentedModule {
    GradedMap presentation;

    const RingId& ring() const { return presentation.ring(); }
    const FreeGraded& f0() const { return presentation.tgt(); }
    const FreeGraded& f1() const { return presentation.src(); }

    static PresentedModule free_module(const FreeGraded& F)
    {
        return {GradedMap::zero(FreeGraded{F.ring, {}}, F)};
    }
};

/// Degree-d piece of a presented module, with quotient coordinates.
class ModulePiece {
public:
    ModulePiece(const PresentedModule& M, int d)
        : F0_(M.f0()), d_(d), image_(F0_.piece_dim(d))
    {
        Mat block = M.presentation.degree_block(d);
        image_.insert_columns(block);
        comp_ = image_.complement();
    }

    int degree() const { return d_; }
    std::size_t dim() const { return comp_.size(); }
    std::size_t ambient_dim() const { return image_.ambient(); }

    /// Quotient coordinates of an F0 coordinate vector.
    std::vector<Fp> coords(const std::vector<Fp>& v) const { return image_.quotient_coords(v); }

    std::vector<Fp> coords(const FreeColumn& col) const
    {
        return coords(column_coords(F0_, col, d_));
    }

    /// Coset representative in F0 coordinates of the k-th quotient basis vector.
    std::vector<Fp> lift(std::size_t k) const
    {
        std::vector<Fp> v(image_.ambient(), Fp(0));
        v[comp_[k]] = Fp(1);
        return v;
    }

    std::vector<Fp> lift_coords(const std::vector<Fp>& q) const
    {
        std::vector<Fp> v(image_.ambient(), Fp(0));
        for (std::size_t k = 0; k < comp_.size(); ++k) v[comp_[k]] = q[k];
        return v;
    }

private:
    FreeGraded F0_;
    int d_;
    Subspace image_;
    std::vector<std::size_t> comp_;
};

inline std::size_t piece_dim(const PresentedModule& M, int d)
{
    return ModulePiece(M, d).dim();
}

} // namespace fourpoints

#endif
