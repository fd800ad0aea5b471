#include "hopfforge/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hopfforge/transport.hpp"

namespace hopfforge {

// ---------------------------------------------------------------------------
// group tables
// ---------------------------------------------------------------------------

GroupTable cyclic_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic_group: order must be positive");
    GroupTable g;
    g.order = n;
    g.mul.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    return g;
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) {
    GroupTable g;
    g.order = a.order * b.order;
    g.mul.assign(g.order, std::vector<std::size_t>(g.order));
    auto idx = [&](std::size_t i, std::size_t j) { return i * b.order + j; };
    for (std::size_t i1 = 0; i1 < a.order; ++i1)
        for (std::size_t j1 = 0; j1 < b.order; ++j1)
            for (std::size_t i2 = 0; i2 < a.order; ++i2)
                for (std::size_t j2 = 0; j2 < b.order; ++j2)
                    g.mul[idx(i1, j1)][idx(i2, j2)] = idx(a.mul[i1][i2], b.mul[j1][j2]);
    return g;
}

// elements r^i (index i) and r^i s (index n + i); s r^j = r^{-j} s
GroupTable dihedral_group(std::size_t n) {
    if (n < 3) throw std::invalid_argument("dihedral_group: need n >= 3");
    GroupTable g;
    g.order = 2 * n;
    g.mul.assign(g.order, std::vector<std::size_t>(g.order));
    auto red = [n](std::size_t i) { return i % n; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g.mul[i][j] = red(i + j);                      // r^i r^j
            g.mul[i][n + j] = n + red(i + j);              // r^i (r^j s)
            g.mul[n + i][j] = n + red(i + n - red(j));     // (r^i s) r^j = r^{i-j} s
            g.mul[n + i][n + j] = red(i + n - red(j));     // (r^i s)(r^j s) = r^{i-j}
        }
    return g;
}

GroupTable symmetric_group_3() { return dihedral_group(3); }

// basis order 1, -1, i, -i, j, -j, k, -k
GroupTable quaternion_group() {
    // unit products: entry {target unit, sign flip} for units 1,i,j,k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int flip[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // unit[u][v], flip[u][v] encode u*v = (-1)^{flip} unit  (u, v in {1,i,j,k})
    GroupTable g;
    g.order = 8;
    g.mul.assign(8, std::vector<std::size_t>(8));
    for (int u = 0; u < 4; ++u)
        for (int su = 0; su < 2; ++su)
            for (int v = 0; v < 4; ++v)
                for (int sv = 0; sv < 2; ++sv) {
                    int w = unit[u][v];
                    int sw = (su + sv + flip[u][v]) % 2;
                    g.mul[2 * u + su][2 * v + sv] = 2 * w + sw;
                }
    return g;
}

namespace {

int permutation_parity(const std::vector<std::size_t>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2;
}

} // namespace

GroupTable alternating_group_4() {
    std::vector<std::vector<std::size_t>> elems;
    std::vector<std::size_t> p{0, 1, 2, 3};
    do {
        if (permutation_parity(p) == 0) elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // lexicographic enumeration puts the identity first
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;

    GroupTable g;
    g.order = elems.size();
    g.mul.assign(g.order, std::vector<std::size_t>(g.order));
    for (std::size_t i = 0; i < g.order; ++i)
        for (std::size_t j = 0; j < g.order; ++j) {
            std::vector<std::size_t> comp(4);
            for (std::size_t x = 0; x < 4; ++x) comp[x] = elems[i][elems[j][x]];
            g.mul[i][j] = index.at(comp);
        }
    return g;
}

void validate_group_table(const GroupTable& g) {
    const std::size_t n = g.order;
    if (n == 0 || g.mul.size() != n) throw std::invalid_argument("group table: bad shape");
    for (const auto& row : g.mul) {
        if (row.size() != n) throw std::invalid_argument("group table: bad shape");
        for (std::size_t v : row)
            if (v >= n) throw std::invalid_argument("group table: index out of range");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (g.mul[0][i] != i || g.mul[i][0] != i)
            throw std::invalid_argument("group table: element 0 is not an identity");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false), inv(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            seen_row[g.mul[i][j]] = true;
            seen_col[g.mul[j][i]] = true;
            if (g.mul[i][j] == 0) inv[i] = true;
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!seen_row[j] || !seen_col[j])
                throw std::invalid_argument("group table: row or column is not a permutation");
        if (!inv[i]) throw std::invalid_argument("group table: missing inverse");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.mul[g.mul[i][j]][k] != g.mul[i][g.mul[j][k]])
                    throw std::invalid_argument("group table: not associative");
}

// ---------------------------------------------------------------------------
// group algebra
// ---------------------------------------------------------------------------

HopfData group_algebra(const GroupTable& g, const std::string& name) {
    validate_group_table(g);
    const std::size_t n = g.order;
    const CycScalar one = CycScalar::one(1);
    HopfData H = HopfData::zeroed(n, one);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) H.C.at(i, j, g.mul[i][j]) = one;
    for (std::size_t i = 0; i < n; ++i) {
        H.D.at(i, i, i) = one;
        H.xi[i] = one;
    }
    Matrix<CycScalar> S(n, n, CycScalar::zero(1));
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t inv = 0;
        while (g.mul[j][inv] != 0) ++inv;
        S.at(inv, j) = one;
    }
    H.S = std::move(S);
    H.meta.name = name;
    return H;
}

// ---------------------------------------------------------------------------
// small product helpers used when assembling non-group builders
// ---------------------------------------------------------------------------

namespace {

template <class F>
std::vector<F> mul_vec(const Tensor3<F>& C, const std::vector<F>& a, const std::vector<F>& b,
                       const F& zero) {
    const std::size_t n = C.dim();
    std::vector<F> out(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(b[j])) continue;
            F w = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) {
                const F& c = C.at(i, j, k);
                if (!is_zero(c)) add_mul(out[k], w, c);
            }
        }
    }
    return out;
}

// product in H (x) H, elements as dense length-n^2 coefficient vectors
template <class F>
std::vector<F> tensor_square_mul(const Tensor3<F>& C, const std::vector<F>& A,
                                 const std::vector<F>& B, const F& zero) {
    const std::size_t n = C.dim();
    std::vector<F> out(n * n, zero);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const F& a = A[u * n + v];
            if (is_zero(a)) continue;
            for (std::size_t w = 0; w < n; ++w)
                for (std::size_t z = 0; z < n; ++z) {
                    const F& b = B[w * n + z];
                    if (is_zero(b)) continue;
                    F ab = a * b;
                    for (std::size_t k = 0; k < n; ++k) {
                        const F& cu = C.at(u, w, k);
                        if (is_zero(cu)) continue;
                        F abc = ab * cu;
                        for (std::size_t l = 0; l < n; ++l) {
                            const F& cv = C.at(v, z, l);
                            if (!is_zero(cv)) add_mul(out[k * n + l], abc, cv);
                        }
                    }
                }
        }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Taft algebras
// ---------------------------------------------------------------------------

HopfData taft_algebra(unsigned p) {
    if (p != 2 && p != 3) throw std::invalid_argument("taft_algebra: p must be 2 or 3");
    const std::size_t n = std::size_t(p) * p;
    const CycScalar one = CycScalar::one(p);
    const CycScalar zero = CycScalar::zero(p);
    const CycScalar q = CycScalar::zeta(p);
    auto idx = [p](unsigned i, unsigned j) { return std::size_t(j) * p + i; }; // y^i x^j

    HopfData H = HopfData::zeroed(n, one);

    // products: (y^a x^b)(y^c x^d) = q^{bc} y^{a+c} x^{b+d}, x^p = 0
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b)
            for (unsigned c = 0; c < p; ++c)
                for (unsigned d = 0; d < p; ++d) {
                    if (b + d >= p) continue;
                    H.C.at(idx(a, b), idx(c, d), idx((a + c) % p, b + d)) =
                        q.pow(std::size_t(b) * c);
                }

    // comultiplication: Delta(y^i x^j) = (y (x) y)^i (x (x) y + 1 (x) x)^j
    std::vector<CycScalar> dx(n * n, zero);
    dx[idx(0, 1) * n + idx(1, 0)] = one; // x (x) y
    dx[idx(0, 0) * n + idx(0, 1)] = one; // 1 (x) x
    std::vector<std::vector<CycScalar>> dx_pow(p);
    dx_pow[0].assign(n * n, zero);
    dx_pow[0][idx(0, 0) * n + idx(0, 0)] = one;
    for (unsigned j = 1; j < p; ++j) dx_pow[j] = tensor_square_mul(H.C, dx_pow[j - 1], dx, zero);
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            std::vector<CycScalar> yy(n * n, zero);
            yy[idx(i, 0) * n + idx(i, 0)] = one;
            std::vector<CycScalar> d = tensor_square_mul(H.C, yy, dx_pow[j], zero);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!is_zero(d[a * n + b])) H.D.at(idx(i, j), a, b) = d[a * n + b];
        }

    for (unsigned i = 0; i < p; ++i) H.xi[idx(i, 0)] = one;

    // antipode: S(y) = y^{p-1}, S(x) = -x y^{p-1}, extended anti-multiplicatively
    Matrix<CycScalar> S(n, n, zero);
    std::vector<CycScalar> sx(n, zero); // = -(x * y^{p-1})
    {
        std::vector<CycScalar> vx(n, zero), vy(n, zero);
        vx[idx(0, 1)] = one;
        vy[idx(p - 1, 0)] = one;
        sx = mul_vec(H.C, vx, vy, zero);
        for (auto& c : sx) c = -c;
    }
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            // S(y^i x^j) = S(x)^j S(y^i) = S(x)^j y^{-i}
            std::vector<CycScalar> acc(n, zero);
            acc[idx(0, 0)] = one;
            for (unsigned r = 0; r < j; ++r) acc = mul_vec(H.C, acc, sx, zero);
            std::vector<CycScalar> yi(n, zero);
            yi[idx((p - i % p) % p, 0)] = one;
            acc = mul_vec(H.C, acc, yi, zero);
            for (std::size_t r = 0; r < n; ++r)
                if (!is_zero(acc[r])) S.at(r, idx(i, j)) = acc[r];
        }
    H.S = std::move(S);
    H.meta.name = p == 2 ? "T_4" : "T_9";
    return H;
}

// ---------------------------------------------------------------------------
// x-extension families in dimensions 8 and 12
// ---------------------------------------------------------------------------

template <class F>
StructureData<F> x2_structure(std::size_t N, const F& alpha) {
    if (N != 4 && N != 6) throw std::invalid_argument("x2_structure: N must be 4 or 6");
    const std::size_t n = 2 * N;
    const F one = one_like(alpha);
    F zero = one;
    zero -= one;
    StructureData<F> H = StructureData<F>::zeroed(n, one);

    auto gi = [&](std::size_t i) { return i % N; };          // g^i
    auto gx = [&](std::size_t i) { return N + (i % N); };    // g^i x
    auto sgn = [&](std::size_t j) { return j % 2 == 0 ? one : -one; };

    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            H.C.at(gi(i), gi(j), gi(i + j)) = one;            // g^i g^j
            H.C.at(gi(i), gx(j), gx(i + j)) = one;            // g^i (g^j x)
            H.C.at(gx(i), gi(j), gx(i + j)) = sgn(j);         // (g^i x) g^j
            // (g^i x)(g^j x) = (-1)^j g^{i+j} x^2
            F c = alpha * sgn(j);
            if (N == 4) {
                H.C.at(gx(i), gx(j), gi(i + j)) = c;          // alpha (1 - g^2) g^{i+j}
                H.C.at(gx(i), gx(j), gi(i + j + 2)) = -c;
            } else {
                H.C.at(gx(i), gx(j), gi(i + j + 2)) = c;      // alpha (g^2 - 1) g^{i+j}
                H.C.at(gx(i), gx(j), gi(i + j)) = -c;
            }
        }

    for (std::size_t i = 0; i < N; ++i) {
        H.D.at(gi(i), gi(i), gi(i)) = one;                    // Delta g^i = g^i (x) g^i
        H.D.at(gx(i), gx(i), gi(i + 1)) = one;                // g^i x (x) g^{i+1}
        H.D.at(gx(i), gi(i), gx(i)) = one;                    // g^i (x) g^i x
        H.xi[gi(i)] = one;
    }

    Matrix<F> S(n, n, zero);
    for (std::size_t i = 0; i < N; ++i) {
        S.at(gi((N - i) % N), gi(i)) = one;                   // S(g^i) = g^{-i}
        // S(g^i x) = (-1)^i g^{N-1-i} x
        S.at(gx((2 * N - 1 - i) % N), gx(i)) = sgn(i);
    }
    H.S = std::move(S);
    return H;
}

template StructureData<CycScalar> x2_structure<CycScalar>(std::size_t, const CycScalar&);
template StructureData<RatFunc> x2_structure<RatFunc>(std::size_t, const RatFunc&);

HopfData x2_point(std::size_t N, const Rational& alpha) {
    HopfData H = x2_structure<CycScalar>(N, CycScalar::from_rational(1, alpha));
    H.meta.name = "x2(" + std::to_string(N) + "," + alpha.get_str() + ")";
    return H;
}

FamilyData x2_generic(std::size_t N) {
    FamilyData H = x2_structure<RatFunc>(N, RatFunc::t(1));
    H.meta.name = "x2(" + std::to_string(N) + ",t)";
    return H;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

namespace {

HopfData build_group(const GroupTable& t, const std::string& display, const std::string& kind) {
    HopfData H = group_algebra(t, display);
    H.meta.info["kind"] = kind;
    H.meta.info["rigidity"] = "rigid";
    return H;
}

HopfData build_dual_of(const std::string& base_id, const std::string& display,
                       const std::string& kind, const std::string& rigidity) {
    HopfData H = dual(catalog_get(base_id)).data;
    H.meta.name = display;
    H.meta.info["kind"] = kind;
    H.meta.info["rigidity"] = rigidity;
    return H;
}

HopfData build_x2(std::size_t N, long alpha, const std::string& display,
                  const std::string& rigidity) {
    HopfData H = x2_point(N, Rational(alpha));
    H.meta.name = display;
    H.meta.info["kind"] = "x2";
    H.meta.info["rigidity"] = rigidity;
    return H;
}

std::vector<CatalogEntry> make_entries() {
    std::vector<CatalogEntry> v;
    auto add = [&v](std::string id, std::string display, std::size_t dim, std::string kind,
                    std::string rigidity, std::function<HopfData()> build) {
        v.push_back({std::move(id), std::move(display), dim, std::move(kind),
                     std::move(rigidity), std::move(build)});
    };

    for (std::size_t m = 2; m <= 13; ++m) {
        std::string id = "KZ_" + std::to_string(m);
        add(id, id, m, "group", "rigid",
            [m, id] { return build_group(cyclic_group(m), id, "group"); });
    }
    add("KZ_2xZ_2", "K(Z_2 x Z_2)", 4, "group", "rigid", [] {
        return build_group(product_group(cyclic_group(2), cyclic_group(2)), "K(Z_2 x Z_2)",
                           "group");
    });
    add("KZ_2xZ_4", "K(Z_2 x Z_4)", 8, "group", "rigid", [] {
        return build_group(product_group(cyclic_group(2), cyclic_group(4)), "K(Z_2 x Z_4)",
                           "group");
    });
    add("KZ_2xZ_2xZ_2", "K(Z_2 x Z_2 x Z_2)", 8, "group", "rigid", [] {
        return build_group(
            product_group(cyclic_group(2), product_group(cyclic_group(2), cyclic_group(2))),
            "K(Z_2 x Z_2 x Z_2)", "group");
    });
    add("KZ_6xZ_2", "K(Z_6 x Z_2)", 12, "group", "rigid", [] {
        return build_group(product_group(cyclic_group(6), cyclic_group(2)), "K(Z_6 x Z_2)",
                           "group");
    });
    add("KZ_4xZ_3", "K(Z_4 x Z_3)", 12, "group", "rigid", [] {
        return build_group(product_group(cyclic_group(4), cyclic_group(3)), "K(Z_4 x Z_3)",
                           "group");
    });
    add("KS_3", "KS_3", 6, "group", "rigid",
        [] { return build_group(symmetric_group_3(), "KS_3", "group"); });
    add("KD_4", "KD_4", 8, "group", "rigid",
        [] { return build_group(dihedral_group(4), "KD_4", "group"); });
    add("KD_5", "KD_5", 10, "group", "rigid",
        [] { return build_group(dihedral_group(5), "KD_5", "group"); });
    add("KD_6", "KD_6", 12, "group", "rigid",
        [] { return build_group(dihedral_group(6), "KD_6", "group"); });
    add("KQ_8", "KQ_8", 8, "group", "rigid",
        [] { return build_group(quaternion_group(), "KQ_8", "group"); });
    add("KA_4", "KA_4", 12, "group", "rigid",
        [] { return build_group(alternating_group_4(), "KA_4", "group"); });

    for (const char* base : {"KS_3", "KD_4", "KD_5", "KD_6", "KQ_8", "KA_4"}) {
        std::string id = std::string(base) + "_star";
        std::string display = std::string(base) + "^*";
        std::size_t dim = base[1] == 'S' ? 6 : (base[1] == 'A' ? 12 : 2 * (base[3] - '0'));
        if (std::string(base) == "KQ_8") dim = 8;
        add(id, display, dim, "group-dual", "rigid",
            [base, display] { return build_dual_of(base, display, "group-dual", "rigid"); });
    }

    add("T_4", "T_4", 4, "taft", "rigid", [] {
        HopfData H = taft_algebra(2);
        H.meta.info["kind"] = "taft";
        H.meta.info["rigidity"] = "rigid";
        return H;
    });
    add("T_9", "T_9", 9, "taft", "rigid", [] {
        HopfData H = taft_algebra(3);
        H.meta.info["kind"] = "taft";
        H.meta.info["rigidity"] = "rigid";
        return H;
    });

    add("A_C4_prime", "A'_C4", 8, "x2", "not rigid",
        [] { return build_x2(4, 0, "A'_C4", "not rigid"); });
    add("A_C4_doubleprime", "A''_C4", 8, "x2", "rigid",
        [] { return build_x2(4, 1, "A''_C4", "rigid"); });
    add("A_0", "A_0", 12, "x2", "not rigid", [] { return build_x2(6, 0, "A_0", "not rigid"); });
    add("A_1", "A_1", 12, "x2", "rigid", [] { return build_x2(6, 1, "A_1", "rigid"); });
    add("B_1", "B_1", 12, "x2-dual", "not rigid",
        [] { return build_dual_of("A_0", "B_1", "x2-dual", "not rigid"); });
    add("A_1_star", "A_1^*", 12, "x2-dual", "rigid",
        [] { return build_dual_of("A_1", "A_1^*", "x2-dual", "rigid"); });

    return v;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = make_entries();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return &e;
    return nullptr;
}

HopfData catalog_get(const std::string& id) {
    const CatalogEntry* e = catalog_find(id);
    if (!e) throw std::out_of_range("catalog: unknown id '" + id + "'");
    return e->build();
}

} // namespace hopfforge
