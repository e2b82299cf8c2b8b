#pragma once

#include "exalg/perm_group.hpp"
#include "exalg/rational.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace exalg {

// ---- cycle notation ----

/// Parses "(0 1)(2 3)" (also accepts commas inside cycles); "()" is the identity.
inline Perm parse_cycles(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        if (text[i] != '(') throw std::domain_error("cycle notation: expected '(' in " + text);
        ++i;
        std::vector<int> cyc;
        std::string num;
        while (i < text.size() && text[i] != ')') {
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                num += c;
            } else if (c == ' ' || c == ',' || c == '\t') {
                if (!num.empty()) {
                    cyc.push_back(std::stoi(num));
                    num.clear();
                }
            } else {
                throw std::domain_error("cycle notation: bad character in " + text);
            }
            ++i;
        }
        if (i >= text.size()) throw std::domain_error("cycle notation: missing ')' in " + text);
        ++i;
        if (!num.empty()) cyc.push_back(std::stoi(num));
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (from < 0 || from >= degree) throw std::domain_error("cycle notation: point out of range");
            img[from] = to;
        }
    }
    return Perm(img);
}

// ---- built-in groups ----

inline GroupPtr cyclic_group(int n) {
    if (n == 1) return PermGroup::close(1, {}, "Z1");
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return PermGroup::close(n, {Perm(img)}, "Z" + std::to_string(n));
}

inline GroupPtr symmetric_group(int n) {
    if (n > 5) throw std::domain_error("symmetric_group: n <= 5 only");
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.emplace_back(t);
    }
    if (n >= 3) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
        gens.emplace_back(c);
    }
    return PermGroup::close(std::max(n, 1), gens, "S" + std::to_string(n));
}

inline GroupPtr alternating_group_4() {
    // (0 1 2) and (0 1)(2 3)
    return PermGroup::close(4, {parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)", 4)}, "A4");
}

inline GroupPtr dihedral_group(int n) {
    // order 2n: rotation + reflection
    std::vector<int> rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        ref[i] = (n - i) % n;
    }
    return PermGroup::close(n, {Perm(rot), Perm(ref)}, "D" + std::to_string(n));
}

inline GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const std::string& name) {
    int da = a->degree(), db = b->degree();
    std::vector<Perm> gens;
    for (const auto& g : a->generators()) {
        std::vector<int> img(da + db);
        for (int i = 0; i < da; ++i) img[i] = g(i);
        for (int i = 0; i < db; ++i) img[da + i] = da + i;
        gens.emplace_back(img);
    }
    for (const auto& g : b->generators()) {
        std::vector<int> img(da + db);
        for (int i = 0; i < da; ++i) img[i] = i;
        for (int i = 0; i < db; ++i) img[da + i] = da + g(i);
        gens.emplace_back(img);
    }
    return PermGroup::close(da + db, gens, name);
}

/// Quaternion group with labeled elements 1,-1,i,-i,j,-j,k,-k.
inline const LabeledGroup& quaternion_group_labeled() {
    static const LabeledGroup lg = [] {
        // indices: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
        auto neg = [](int x) { return x ^ 1; };
        std::vector<std::vector<int>> t(8, std::vector<int>(8));
        // base table on {1,i,j,k} with signs
        auto unit_mul = [&](int u, int v, int& sign) {
            // u,v in {0=1,1=i,2=j,3=k}; returns product unit, sets sign *= +-1
            static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
            static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
            sign *= sgn[u][v];
            return prod[u][v];
        };
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                int ua = a / 2, sa = (a % 2) ? -1 : 1;
                int ub = b / 2, sb = (b % 2) ? -1 : 1;
                int sign = sa * sb;
                int u = unit_mul(ua, ub, sign);
                int idx = 2 * u + (sign < 0 ? 1 : 0);
                t[a][b] = idx;
            }
        (void)neg;
        return labeled_group_from_table(
            t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
    }();
    return lg;
}

inline GroupPtr quaternion_group() { return quaternion_group_labeled().group; }

/// The 24 unit Hurwitz quaternions (binary tetrahedral group 2T) as a labeled
/// group; quaternion coordinates of each element are exposed for building the
/// conjugation action on the rational quaternion algebra.
struct BinaryTetrahedral {
    LabeledGroup lg;
    std::vector<std::array<Rational, 4>> coords;  // (1,i,j,k) coordinates per table index
};

inline std::array<Rational, 4> quat_mul(const std::array<Rational, 4>& a,
                                        const std::array<Rational, 4>& b) {
    // Hamilton product, basis (1, i, j, k), i^2=j^2=k^2=-1
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

inline const BinaryTetrahedral& binary_tetrahedral_group() {
    static const BinaryTetrahedral bt = [] {
        std::vector<std::array<Rational, 4>> elems;
        Rational h(1, 2), one(1);
        // identity must be index 0
        elems.push_back({one, Rational(0), Rational(0), Rational(0)});
        for (int u = 0; u < 4; ++u)
            for (int s = 0; s < 2; ++s) {
                std::array<Rational, 4> q{Rational(0), Rational(0), Rational(0), Rational(0)};
                q[u] = s ? Rational(-1) : Rational(1);
                if (u == 0 && s == 0) continue;  // identity already placed
                elems.push_back(q);
            }
        for (int m = 0; m < 16; ++m) {
            std::array<Rational, 4> q;
            for (int c = 0; c < 4; ++c) q[c] = (m >> c) & 1 ? -h : h;
            elems.push_back(q);
        }
        auto find = [&](const std::array<Rational, 4>& q) {
            for (size_t i = 0; i < elems.size(); ++i)
                if (elems[i] == q) return static_cast<int>(i);
            throw std::logic_error("binary tetrahedral: not closed");
        };
        size_t n = elems.size();
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        std::vector<std::string> labels(n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) table[i][j] = find(quat_mul(elems[i], elems[j]));
            labels[i] = "q" + std::to_string(i);
        }
        BinaryTetrahedral out;
        out.lg = labeled_group_from_table(table, labels, "2T");
        out.coords = std::move(elems);
        return out;
    }();
    return bt;
}

// ---- catalog ----

struct CatalogEntry {
    std::string name;
    int degree;
    std::vector<std::string> gens;  // cycle notation
};

/// Parses the catalog text format: one entry per line,
/// `name <label>; degree <n>; gens <cycles>, <cycles>, ...`.
inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[line.find_first_not_of(" \t")] == '#') continue;
        CatalogEntry e;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ';')) {
            std::istringstream fs(field);
            std::string key;
            fs >> key;
            if (key == "name") {
                fs >> e.name;
            } else if (key == "degree") {
                fs >> e.degree;
            } else if (key == "gens") {
                std::string rest;
                std::getline(fs, rest);
                // split on commas that are outside parentheses
                std::string cur;
                int depth = 0;
                for (char c : rest) {
                    if (c == '(') ++depth;
                    if (c == ')') --depth;
                    if (c == ',' && depth == 0) {
                        if (cur.find('(') != std::string::npos) e.gens.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                if (cur.find('(') != std::string::npos) e.gens.push_back(cur);
            } else if (!key.empty()) {
                throw std::domain_error("catalog: unknown field '" + key + "'");
            }
        }
        if (e.name.empty() || e.degree <= 0) throw std::domain_error("catalog: bad entry: " + line);
        out.push_back(std::move(e));
    }
    return out;
}

inline GroupPtr group_from_entry(const CatalogEntry& e) {
    std::vector<Perm> gens;
    for (const auto& g : e.gens) gens.push_back(parse_cycles(g, e.degree));
    return PermGroup::close(e.degree, gens, e.name);
}

/// Resolves built-in constructor names: Zn, ZmxZn, Dn, Q8, Sn (n<=5), A4, S3xZ2.
inline GroupPtr builtin_group(const std::string& name) {
    auto starts = [&](const std::string& p) {
        return name.size() > p.size() && name.compare(0, p.size(), p) == 0;
    };
    if (name == "Q8") return quaternion_group();
    if (name == "A4") return alternating_group_4();
    if (starts("S") && name.find('x') == std::string::npos) {
        int n = std::stoi(name.substr(1));
        return symmetric_group(n);
    }
    if (starts("D")) return dihedral_group(std::stoi(name.substr(1)));
    if (starts("Z")) {
        auto x = name.find('x');
        if (x == std::string::npos) return cyclic_group(std::stoi(name.substr(1)));
        int m = std::stoi(name.substr(1, x - 1));
        if (name[x + 1] != 'Z') throw std::domain_error("builtin_group: bad product name " + name);
        int n = std::stoi(name.substr(x + 2));
        return direct_product(cyclic_group(m), cyclic_group(n), name);
    }
    auto x = name.find('x');
    if (x != std::string::npos) {
        return direct_product(builtin_group(name.substr(0, x)), builtin_group(name.substr(x + 1)),
                              name);
    }
    throw std::domain_error("builtin_group: unknown group " + name);
}

}  // namespace exalg
