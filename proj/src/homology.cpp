#include "isolink/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace isolink {

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

Int IntegerMatrix::at(int r, int c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Int(0) : it->second;
}

void IntegerMatrix::set(int r, int c, Int value) {
    if (value == 0) {
        data_[r].erase(c);
    } else {
        data_[r][c] = std::move(value);
    }
}

void IntegerMatrix::add(int r, int c, const Int& value) {
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
        if (value != 0) {
            data_[r].emplace(c, value);
        }
        return;
    }
    it->second += value;
    if (it->second == 0) {
        data_[r].erase(it);
    }
}

long long IntegerMatrix::nonzero_count() const {
    long long n = 0;
    for (const auto& row : data_) {
        n += static_cast<long long>(row.size());
    }
    return n;
}

namespace {

/// Elimination workspace: row maps plus a column index of nonzero rows.
struct SmithWork {
    std::vector<std::map<int, Int>> row;
    std::vector<std::set<int>> col_rows;

    explicit SmithWork(IntegerMatrix m) : row(m.rows()), col_rows(m.cols()) {
        for (int r = 0; r < m.rows(); ++r) {
            for (const auto& [c, v] : m.row(r)) {
                row[r][c] = v;
                col_rows[c].insert(r);
            }
        }
    }

    void put(int r, int c, Int v) {
        auto it = row[r].find(c);
        if (v == 0) {
            if (it != row[r].end()) {
                row[r].erase(it);
                col_rows[c].erase(r);
            }
            return;
        }
        if (it == row[r].end()) {
            row[r].emplace(c, std::move(v));
            col_rows[c].insert(r);
        } else {
            it->second = std::move(v);
        }
    }

    Int get(int r, int c) const {
        auto it = row[r].find(c);
        return it == row[r].end() ? Int(0) : it->second;
    }

    /// row[dst] += coeff * row[src]
    void row_axpy(int dst, int src, const Int& coeff) {
        for (const auto& [c, v] : row[src]) {
            put(dst, c, get(dst, c) + coeff * v);
        }
    }
};

} // namespace

SmithResult smith_normal_form(IntegerMatrix m) {
    SmithWork w(std::move(m));
    const int rows = static_cast<int>(w.row.size());
    std::vector<Int> factors;

    while (true) {
        // Deterministic pivot: smallest |value|, ties by (row, column).
        int pr = -1, pc = -1;
        Int best;
        for (int r = 0; r < rows; ++r) {
            for (const auto& [c, v] : w.row[r]) {
                Int a = abs(v);
                if (pr < 0 || a < best) {
                    pr = r;
                    pc = c;
                    best = a;
                }
            }
            if (pr >= 0 && best == 1) {
                break;
            }
        }
        if (pr < 0) {
            break;
        }

        // Clear the pivot column and row; every nonzero remainder becomes the
        // new, strictly smaller pivot, so this terminates.
        while (true) {
            Int p = w.get(pr, pc);
            bool restart = false;
            std::vector<int> col(w.col_rows[pc].begin(), w.col_rows[pc].end());
            for (int r : col) {
                if (r == pr) {
                    continue;
                }
                Int q = w.get(r, pc) / p;
                if (q != 0) {
                    w.row_axpy(r, pr, -q);
                }
                if (w.get(r, pc) != 0) {
                    pr = r;
                    restart = true;
                    break;
                }
            }
            if (restart) {
                continue;
            }
            // Column holds only the pivot now, so clearing the row only
            // touches the pivot row itself.
            std::vector<std::pair<int, Int>> entries(w.row[pr].begin(), w.row[pr].end());
            for (const auto& [c, v] : entries) {
                if (c == pc) {
                    continue;
                }
                Int rem = v - (v / p) * p;
                w.put(pr, c, rem);
                if (rem != 0) {
                    pc = c;
                    restart = true;
                    break;
                }
            }
            if (!restart) {
                break;
            }
        }

        factors.push_back(abs(w.get(pr, pc)));
        w.put(pr, pc, 0);
    }

    // Diagonal entries are only defined up to unimodular equivalence; push
    // them into divisibility order by repeated gcd/lcm exchanges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < factors.size(); ++i) {
            for (size_t j = i + 1; j < factors.size(); ++j) {
                if (factors[j] % factors[i] != 0) {
                    Int g = gcd(factors[i], factors[j]);
                    Int l = factors[i] / g * factors[j];
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(factors.begin(), factors.end());
    SmithResult out;
    out.rank = static_cast<int>(factors.size());
    out.invariant_factors = std::move(factors);
    return out;
}

long long HomologyResult::betti(int d) const {
    if (d < 0 || d >= static_cast<int>(degrees.size())) {
        return 0;
    }
    return degrees[d].betti;
}

std::vector<Int> HomologyResult::torsion(int d) const {
    if (d < 0 || d >= static_cast<int>(degrees.size())) {
        return {};
    }
    return degrees[d].torsion;
}

bool HomologyResult::all_trivial() const {
    for (const auto& h : degrees) {
        if (!h.trivial()) {
            return false;
        }
    }
    return true;
}

long long HomologyResult::reduced_betti(int d, bool empty_complex) const {
    if (d == 0 && !empty_complex) {
        return betti(0) - 1;
    }
    return betti(d);
}

HomologyResult homology_of_chain_complex(const ChainComplexData& cc) {
    const int top = static_cast<int>(cc.dims.size()) - 1;
    HomologyResult out;
    if (top < 0) {
        return out;
    }
    std::vector<SmithResult> snf(top + 1);
    for (int k = 1; k <= top; ++k) {
        snf[k] = smith_normal_form(cc.boundaries[k - 1]);
    }
    out.degrees.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        long long rank_in = (k == 0) ? 0 : snf[k].rank;
        long long rank_out = (k == top) ? 0 : snf[k + 1].rank;
        out.degrees[k].betti = cc.dims[k] - rank_in - rank_out;
        if (k < top) {
            for (const Int& f : snf[k + 1].invariant_factors) {
                if (f > 1) {
                    out.degrees[k].torsion.push_back(f);
                }
            }
        }
    }
    return out;
}

namespace {

/// Offsets of each dimension block in the canonical simplex order.
std::vector<int> dimension_offsets(const SimplicialComplex& k) {
    std::vector<int> f = k.f_vector();
    std::vector<int> off(f.size() + 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        off[i + 1] = off[i] + f[i];
    }
    return off;
}

} // namespace

ChainComplexData chain_complex_of(const SimplicialComplex& k) {
    ChainComplexData cc;
    const int dim = k.dimension();
    if (dim < 0) {
        return cc;
    }
    std::vector<int> f = k.f_vector();
    std::vector<int> off = dimension_offsets(k);
    cc.dims.assign(f.begin(), f.end());
    for (int d = 1; d <= dim; ++d) {
        IntegerMatrix boundary(f[d - 1], f[d]);
        for (int col = 0; col < f[d]; ++col) {
            const Simplex& s = k.simplices()[off[d] + col];
            int sign = 1;
            for (size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (size_t j = 0; j < s.size(); ++j) {
                    if (j != i) {
                        face.push_back(s[j]);
                    }
                }
                boundary.add(k.index_of(face) - off[d - 1], col, sign);
                sign = -sign;
            }
        }
        cc.boundaries.push_back(std::move(boundary));
    }
    return cc;
}

HomologyResult homology_of(const SimplicialComplex& k) {
    return homology_of_chain_complex(chain_complex_of(k));
}

IntegerMatrix chain_map_matrix(const SimplicialComplex& x, const SimplicialComplex& y,
                               const std::vector<int>& vertex_map, int degree) {
    std::vector<int> fx = x.f_vector();
    std::vector<int> fy = y.f_vector();
    const int nx = degree < static_cast<int>(fx.size()) ? fx[degree] : 0;
    const int ny = degree < static_cast<int>(fy.size()) ? fy[degree] : 0;
    IntegerMatrix m(ny, nx);
    if (nx == 0) {
        return m;
    }
    std::vector<int> off_x = dimension_offsets(x);
    std::vector<int> off_y = dimension_offsets(y);
    for (int col = 0; col < nx; ++col) {
        const Simplex& s = x.simplices()[off_x[degree] + col];
        std::vector<int> image;
        image.reserve(s.size());
        for (int v : s) {
            image.push_back(vertex_map[v]);
        }
        // Count inversions for the orientation sign; duplicates collapse to 0.
        int inversions = 0;
        bool degenerate = false;
        for (size_t i = 0; i < image.size() && !degenerate; ++i) {
            for (size_t j = i + 1; j < image.size(); ++j) {
                if (image[i] == image[j]) {
                    degenerate = true;
                    break;
                }
                if (image[i] > image[j]) {
                    ++inversions;
                }
            }
        }
        if (degenerate) {
            continue;
        }
        Simplex sorted = image;
        std::sort(sorted.begin(), sorted.end());
        int row = y.index_of(sorted);
        if (row < 0) {
            throw ValidationError("vertex map does not send simplices to simplices");
        }
        m.add(row - off_y[degree], col, (inversions % 2 == 0) ? 1 : -1);
    }
    return m;
}

int component_count(const SimplicialComplex& k) {
    std::vector<int> verts = k.vertices();
    if (verts.empty()) {
        return 0;
    }
    std::map<int, int> root;
    for (int v : verts) {
        root[v] = v;
    }
    auto find = [&](int v) {
        while (root[v] != v) {
            root[v] = root[root[v]];
            v = root[v];
        }
        return v;
    };
    for (const Simplex& s : k.simplices()) {
        if (s.size() == 2) {
            int a = find(s[0]), b = find(s[1]);
            if (a != b) {
                root[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::set<int> roots;
    for (int v : verts) {
        roots.insert(find(v));
    }
    return static_cast<int>(roots.size());
}

bool ExtInt::operator<(const ExtInt& o) const {
    if (kind == o.kind) {
        return kind == Kind::Finite && value < o.value;
    }
    if (kind == Kind::NegInf) {
        return true;
    }
    if (kind == Kind::PosInf) {
        return false;
    }
    return o.kind == Kind::PosInf;
}

std::string ExtInt::to_string() const {
    switch (kind) {
    case Kind::NegInf:
        return "-inf";
    case Kind::PosInf:
        return "inf";
    default:
        return std::to_string(value);
    }
}

ExtInt ext_add(const ExtInt& a, const ExtInt& b) {
    if (a.kind == ExtInt::Kind::PosInf || b.kind == ExtInt::Kind::PosInf) {
        return ExtInt::infinity();
    }
    if (a.kind == ExtInt::Kind::NegInf || b.kind == ExtInt::Kind::NegInf) {
        return ExtInt::negative_infinity();
    }
    return ExtInt::finite(a.value + b.value);
}

ExtInt ext_add(const ExtInt& a, long long b) {
    return ext_add(a, ExtInt::finite(b));
}

ExtInt parse_ext(const std::string& text) {
    if (text == "inf" || text == "+inf") {
        return ExtInt::infinity();
    }
    if (text == "-inf") {
        return ExtInt::negative_infinity();
    }
    long long v = 0;
    size_t used = 0;
    bool ok = true;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        ok = false;
    }
    if (!ok || used != text.size()) {
        throw ValidationError("cannot parse extended integer '" + text + "'");
    }
    return ExtInt::finite(v);
}

Connectivity connectivity_of(const SimplicialComplex& k) {
    if (k.is_empty()) {
        return Connectivity{ExtInt::finite(-2), false};
    }
    if (component_count(k) > 1) {
        return Connectivity{ExtInt::finite(-1), false};
    }
    HomologyResult h = homology_of(k);
    const int dim = k.dimension();
    ExtInt value = ExtInt::infinity();
    for (int d = 1; d <= dim; ++d) {
        if (h.betti(d) != 0 || !h.torsion(d).empty()) {
            value = ExtInt::finite(d - 1);
            break;
        }
    }
    bool caveat = dim >= 1 && (value == ExtInt::infinity() || value.value >= 1);
    return Connectivity{value, caveat};
}

namespace {

long long dim_at(const ChainComplexData& cc, int k) {
    if (k < 0 || k >= static_cast<int>(cc.dims.size())) {
        return 0;
    }
    return cc.dims[k];
}

/// Copies src into dst with the given offsets and an overall sign.
void place_block(IntegerMatrix& dst, const IntegerMatrix& src, int row_off, int col_off,
                 int sign) {
    for (int r = 0; r < src.rows(); ++r) {
        for (const auto& [c, v] : src.row(r)) {
            dst.add(row_off + r, col_off + c, sign > 0 ? v : -v);
        }
    }
}

IntegerMatrix boundary_at(const ChainComplexData& cc, int k) {
    if (k >= 1 && k < static_cast<int>(cc.dims.size())) {
        return cc.boundaries[k - 1];
    }
    return IntegerMatrix(static_cast<int>(dim_at(cc, k - 1)), static_cast<int>(dim_at(cc, k)));
}

/// Mapping cone of a chain map given degreewise: Cone_k = A_{k-1} (+) B_k.
ChainComplexData mapping_cone(const ChainComplexData& a, const ChainComplexData& b,
                              const std::vector<IntegerMatrix>& phi, int top) {
    ChainComplexData cone;
    cone.dims.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        cone.dims[k] = dim_at(a, k - 1) + dim_at(b, k);
    }
    for (int k = 1; k <= top; ++k) {
        IntegerMatrix d(static_cast<int>(cone.dims[k - 1]), static_cast<int>(cone.dims[k]));
        place_block(d, boundary_at(a, k - 1), 0, 0, -1);
        place_block(d, phi[k - 1], static_cast<int>(dim_at(a, k - 2)), 0, +1);
        place_block(d, boundary_at(b, k), static_cast<int>(dim_at(a, k - 2)),
                    static_cast<int>(dim_at(a, k - 1)), +1);
        cone.boundaries.push_back(std::move(d));
    }
    return cone;
}

std::vector<IntegerMatrix> chain_map_matrices(const SimplicialComplex& x,
                                              const SimplicialComplex& y,
                                              const std::vector<int>& vm, int top) {
    std::vector<IntegerMatrix> phi;
    phi.reserve(top + 1);
    for (int k = 0; k <= top; ++k) {
        phi.push_back(chain_map_matrix(x, y, vm, k));
    }
    return phi;
}

} // namespace

Connectivity map_connectivity(const SimplicialComplex& x, const SimplicialComplex& y,
                              const std::vector<int>& vertex_map) {
    const int top = std::max(x.dimension(), y.dimension()) + 1;
    if (top < 0) {
        return Connectivity{ExtInt::infinity(), false};
    }
    ChainComplexData ca = chain_complex_of(x);
    ChainComplexData cb = chain_complex_of(y);
    ChainComplexData cone = mapping_cone(ca, cb, chain_map_matrices(x, y, vertex_map, top), top);
    HomologyResult h = homology_of_chain_complex(cone);
    ExtInt value = ExtInt::infinity();
    for (int d = 0; d <= top; ++d) {
        if (h.betti(d) != 0 || !h.torsion(d).empty()) {
            value = ExtInt::finite(d - 1);
            break;
        }
    }
    bool above_zero = value == ExtInt::infinity() || value.value >= 1;
    bool caveat = above_zero && (x.dimension() >= 1 || y.dimension() >= 1);
    return Connectivity{value, caveat};
}

bool pushout_cone_check(const CommutingSquare& square) {
    auto check_simplicial = [](const SimplicialComplex& src, const SimplicialComplex& dst,
                               const std::vector<int>& vm, const char* label) {
        if (static_cast<int>(vm.size()) < src.id_space()) {
            throw ValidationError(std::string("vertex map ") + label +
                                  " does not cover its source");
        }
        for (const Simplex& s : src.simplices()) {
            Simplex img;
            for (int v : s) {
                img.push_back(vm[v]);
            }
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!dst.contains(img)) {
                throw ValidationError(std::string("map ") + label +
                                      " does not send simplices to simplices");
            }
        }
    };
    check_simplicial(square.z, square.x, square.z_to_x, "z->x");
    check_simplicial(square.z, square.y, square.z_to_y, "z->y");
    check_simplicial(square.x, square.w, square.x_to_w, "x->w");
    check_simplicial(square.y, square.w, square.y_to_w, "y->w");
    for (int v : square.z.vertices()) {
        int via_x = square.x_to_w[square.z_to_x[v]];
        int via_y = square.y_to_w[square.z_to_y[v]];
        if (via_x != via_y) {
            throw NonCommuting("square disagrees at vertex " + std::to_string(v) + ": " +
                               std::to_string(via_x) + " vs " + std::to_string(via_y));
        }
    }

    const int top = std::max({square.x.dimension(), square.z.dimension() + 1,
                              square.y.dimension(), square.w.dimension()}) +
                    1;
    if (top < 0) {
        return true;
    }
    ChainComplexData cx = chain_complex_of(square.x);
    ChainComplexData cz = chain_complex_of(square.z);
    ChainComplexData cy = chain_complex_of(square.y);
    ChainComplexData cw = chain_complex_of(square.w);
    std::vector<IntegerMatrix> u = chain_map_matrices(square.z, square.x, square.z_to_x, top);
    std::vector<IntegerMatrix> v = chain_map_matrices(square.z, square.y, square.z_to_y, top);
    std::vector<IntegerMatrix> iw = chain_map_matrices(square.x, square.w, square.x_to_w, top);
    std::vector<IntegerMatrix> jw = chain_map_matrices(square.y, square.w, square.y_to_w, top);

    // Double mapping cylinder D_k = X_k (+) Z_{k-1} (+) Y_k with the twisted
    // differential d(x, z, y) = (dx + u z, -dz, dy - v z).
    ChainComplexData cyl;
    cyl.dims.resize(top + 1);
    auto x_dim = [&](int k) { return dim_at(cx, k); };
    auto z_dim = [&](int k) { return dim_at(cz, k); };
    auto y_dim = [&](int k) { return dim_at(cy, k); };
    for (int k = 0; k <= top; ++k) {
        cyl.dims[k] = x_dim(k) + z_dim(k - 1) + y_dim(k);
    }
    for (int k = 1; k <= top; ++k) {
        IntegerMatrix d(static_cast<int>(cyl.dims[k - 1]), static_cast<int>(cyl.dims[k]));
        const int row_z = static_cast<int>(x_dim(k - 1));
        const int row_y = row_z + static_cast<int>(z_dim(k - 2));
        const int col_z = static_cast<int>(x_dim(k));
        const int col_y = col_z + static_cast<int>(z_dim(k - 1));
        place_block(d, boundary_at(cx, k), 0, 0, +1);
        place_block(d, u[k - 1], 0, col_z, +1);
        place_block(d, boundary_at(cz, k - 1), row_z, col_z, -1);
        place_block(d, v[k - 1], row_y, col_z, -1);
        place_block(d, boundary_at(cy, k), row_y, col_y, +1);
        cyl.boundaries.push_back(std::move(d));
    }

    // Comparison map D -> C(W) is (x, z, y) |-> i(x) + j(y).
    std::vector<IntegerMatrix> phi;
    for (int k = 0; k <= top; ++k) {
        IntegerMatrix p(static_cast<int>(dim_at(cw, k)), static_cast<int>(cyl.dims[k]));
        place_block(p, iw[k], 0, 0, +1);
        place_block(p, jw[k], 0, static_cast<int>(x_dim(k) + z_dim(k - 1)), +1);
        phi.push_back(std::move(p));
    }
    ChainComplexData cone = mapping_cone(cyl, cw, phi, top + 1);
    return homology_of_chain_complex(cone).all_trivial();
}

} // namespace isolink
