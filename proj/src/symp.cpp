#include "derilab/symp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "derilab/linalg.hpp"

namespace derilab {

Letter color_letter(int g, Color c) {
    check_color(g, c);
    return c > 0 ? Letter(c) : Letter(g - c);
}

Color letter_color(int g, Letter l) {
    if (l < 1 || int(l) > 2 * g) throw range_error("letter out of range for genus");
    return int(l) <= g ? Color(l) : Color(g - int(l));
}

void check_color(int g, Color c) {
    if (c == 0 || c > g || c < -g)
        throw range_error("color out of range for genus " + std::to_string(g));
}

ColorWord parse_color_word(const std::string& text) {
    ColorWord w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v == 0 || v > 127 || v < -127) throw range_error("bad color in spider text");
        w.push_back(Color(v));
    }
    if (w.empty()) throw range_error("empty spider text");
    return w;
}

std::string color_word_str(const ColorWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(int(w[i]));
    }
    return s;
}

TensorElement omega0(int g) {
    if (g < 1) throw range_error("omega0: genus must be >= 1");
    std::vector<TensorElement::Term> raw;
    for (int i = 1; i <= g; ++i) {
        raw.emplace_back(Word{Letter(i), Letter(g + i)}, 1);
        raw.emplace_back(Word{Letter(g + i), Letter(i)}, -1);
    }
    return TensorElement::from_raw(std::move(raw));
}

bool is_symplectic(const AssocDerivation& d, int g) {
    if (d.rank() != 2 * g) throw range_error("is_symplectic: rank must be 2g");
    return apply_assoc(d, omega0(g)).is_zero();
}

bool is_cyclic_invariant(const TensorElement& t) {
    for (const auto& [w, c] : t.terms()) {
        Word rot(w.begin() + 1, w.end());
        rot.push_back(w[0]);
        if (t.coeff(rot) != c) return false;
    }
    return true;
}

namespace {

// Rotation order 1 < -1 < 2 < -2 < ...
inline int rot_key(Color c) { return 2 * (c > 0 ? c : -c) - (c > 0 ? 1 : 0); }

bool rotation_less(const ColorWord& w, std::size_t a, std::size_t b) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        int ka = rot_key(w[(a + i) % n]), kb = rot_key(w[(b + i) % n]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

}  // namespace

ColorWord Spider::canonical_rotation(ColorWord w) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < w.size(); ++r)
        if (rotation_less(w, r, best)) best = r;
    std::rotate(w.begin(), w.begin() + best, w.end());
    return w;
}

Spider::Spider(ColorWord colors, int g) {
    if (colors.size() < 2) throw range_error("spider length must be >= 2");
    for (Color c : colors) check_color(g, c);
    colors_ = canonical_rotation(std::move(colors));
}

int primitive_period(const ColorWord& w) {
    const int n = int(w.size());
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool per = true;
        for (int i = 0; per && i < n; ++i) per = w[i] == w[(i + d) % n];
        if (per) return d;
    }
    return n;
}

namespace {

Word colors_to_word(const ColorWord& cw, int g, std::size_t start) {
    Word w(cw.size());
    for (std::size_t i = 0; i < cw.size(); ++i) w[i] = color_letter(g, cw[(start + i) % cw.size()]);
    return w;
}

}  // namespace

TensorElement spider_to_tensor(const Spider& s, int g) {
    std::vector<TensorElement::Term> raw;
    for (std::size_t r = 0; r < s.colors().size(); ++r)
        raw.emplace_back(colors_to_word(s.colors(), g, r), 1);
    return TensorElement::from_raw(std::move(raw));
}

TensorElement orbit_sum_tensor(const Spider& s, int g) {
    const int d = primitive_period(s.colors());
    std::vector<TensorElement::Term> raw;
    for (int r = 0; r < d; ++r) raw.emplace_back(colors_to_word(s.colors(), g, std::size_t(r)), 1);
    return TensorElement::from_raw(std::move(raw));
}

AssocDerivation derivation_of_invariant_tensor(const TensorElement& t, int g) {
    std::vector<DTerms::Term> raw;
    int degree = -1;
    for (const auto& [w, c] : t.terms()) {
        if (w.size() < 2) throw range_error("invariant tensor must have degree >= 2");
        degree = int(w.size()) - 2;
        Color first = letter_color(g, w[0]);
        // the first slot pairs against the argument: word y (x) rest acts as
        // x -> mu(y, x) rest
        Letter dual = color_letter(g, Color(-first));
        raw.emplace_back(DKey{dual, Word(w.begin() + 1, w.end())}, c * color_sign(first));
    }
    if (degree < 0) degree = 0;
    return {2 * g, degree, DTerms::from_raw(std::move(raw))};
}

TensorElement tensor_of_derivation(const AssocDerivation& d, int g) {
    if (d.rank() != 2 * g) throw range_error("tensor_of_derivation: rank must be 2g");
    std::vector<TensorElement::Term> raw;
    for (const auto& [k, c] : d.terms().terms()) {
        // D* = sum_i (-b_i (x) D(a_i) + a_i (x) D(b_i))
        Color dual = letter_color(g, k.dual);
        Word w{color_letter(g, Color(-dual))};
        w.insert(w.end(), k.w.begin(), k.w.end());
        raw.emplace_back(std::move(w), dual > 0 ? -c : c);
    }
    return TensorElement::from_raw(std::move(raw));
}

SpiderCombo bracket_spider(const Spider& a, const Spider& b, int g) {
    const ColorWord& wa = a.colors();
    const ColorWord& wb = b.colors();
    std::vector<SpiderCombo::Term> raw;
    for (std::size_t i = 0; i < wa.size(); ++i) {
        for (std::size_t j = 0; j < wb.size(); ++j) {
            if (int(wb[j]) != -int(wa[i])) continue;
            ColorWord splice;
            splice.reserve(wa.size() + wb.size() - 2);
            for (std::size_t t = 1; t < wa.size(); ++t) splice.push_back(wa[(i + t) % wa.size()]);
            for (std::size_t t = 1; t < wb.size(); ++t) splice.push_back(wb[(j + t) % wb.size()]);
            raw.emplace_back(Spider(std::move(splice), g), color_sign(wa[i]));
        }
    }
    return SpiderCombo::from_raw(std::move(raw));
}

std::vector<Spider> a_basis(int g, int k) {
    if (g < 1 || k < 0) throw range_error("a_basis: need g >= 1, k >= 0");
    const int len = k + 2;
    std::vector<Color> alphabet;
    for (int i = 1; i <= g; ++i) {
        alphabet.push_back(Color(i));
        alphabet.push_back(Color(-i));
    }
    std::vector<Spider> out;
    ColorWord w(len);
    // enumerate all words, keeping those already in canonical rotation
    std::vector<int> idx(len, 0);
    while (true) {
        for (int i = 0; i < len; ++i) w[i] = alphabet[idx[i]];
        bool minimal = true;
        for (std::size_t r = 1; minimal && r < w.size(); ++r)
            if (rotation_less(w, r, 0)) minimal = false;
        if (minimal) out.emplace_back(w, g);
        int pos = len - 1;
        while (pos >= 0 && idx[pos] == 2 * g - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long a_dimension(int g, int k) {
    const int m = k + 2;
    auto phi = [](int d) {
        int r = d;
        for (int p = 2; p * p <= d; ++p)
            if (d % p == 0) {
                r -= r / p;
                while (d % p == 0) d /= p;
            }
        if (d > 1) r -= r / d;
        return r;
    };
    long long acc = 0;
    for (int d = 1; d <= m; ++d) {
        if (m % d) continue;
        long long pw = 1;
        for (int e = 0; e < m / d; ++e) pw *= 2ll * g;
        acc += phi(d) * pw;
    }
    return acc / m;
}

SympDerivation make_symp_derivation(int g, TensorElement t) {
    if (!is_cyclic_invariant(t))
        throw range_error("symp derivation tensor must be cyclic invariant");
    for (const auto& [w, c] : t.terms()) {
        (void)c;
        check_rank(w, 2 * g);
    }
    return SympDerivation{g, std::move(t)};
}

SympDerivation symp_of_spider(const Spider& s, int g) {
    return SympDerivation{g, spider_to_tensor(s, g)};
}

SpiderCombo spider_coordinates(const SympDerivation& d) {
    std::vector<SpiderCombo::Term> raw;
    for (const auto& [w, c] : d.tensor.terms()) {
        ColorWord cw(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) cw[i] = letter_color(d.g, w[i]);
        Spider s(cw, d.g);
        // record only the canonical word of each orbit
        if (colors_to_word(s.colors(), d.g, 0) == w) raw.emplace_back(std::move(s), c);
    }
    return SpiderCombo::from_raw(std::move(raw));
}

SympDerivation sp_action(const SympDerivation& x, const SympDerivation& d) {
    if (x.g != d.g) throw range_error("sp_action: genus mismatch");
    auto deg = homogeneous_degree(x.tensor);
    if (!deg || *deg != 2) throw range_error("sp_action: left argument must have degree 0");
    AssocDerivation dx = derivation_of_invariant_tensor(x.tensor, x.g);
    AssocDerivation dd = derivation_of_invariant_tensor(d.tensor, d.g);
    return make_symp_derivation(x.g, tensor_of_derivation(bracket_assoc(dx, dd), x.g));
}

SpiderCombo bracket_symp(const SympDerivation& x, const SympDerivation& y) {
    if (x.g != y.g) throw range_error("bracket_symp: genus mismatch");
    AssocDerivation dx = derivation_of_invariant_tensor(x.tensor, x.g);
    AssocDerivation dy = derivation_of_invariant_tensor(y.tensor, y.g);
    return spider_coordinates(
        make_symp_derivation(x.g, tensor_of_derivation(bracket_assoc(dx, dy), x.g)));
}

LieElement omega0_lie(int g) {
    LieElement acc;
    for (int i = 1; i <= g; ++i)
        acc = acc + lie_bracket(lie_generator(Letter(i)), lie_generator(Letter(g + i)));
    return acc;
}

std::vector<LieDerivation> h_basis(int g, int k) {
    if (g < 1 || k < 1) throw range_error("h_basis: need g >= 1, k >= 1");
    const int n = 2 * g;
    std::vector<Word> lw = lyndon_basis(n, k + 1);
    std::vector<DKey> basis;
    for (Letter l = 1; l <= Letter(n); ++l)
        for (const Word& w : lw) basis.push_back(DKey{l, w});

    std::vector<Word> target = lyndon_basis(n, k + 2);
    auto target_index = [&](const Word& w) {
        auto it = std::lower_bound(target.begin(), target.end(), w);
        if (it == target.end() || *it != w) throw oracle_error("h_basis: missing target word");
        return int(it - target.begin());
    };

    LieElement om = omega0_lie(g);
    std::vector<std::vector<std::pair<int, Int>>> columns;
    columns.reserve(basis.size());
    for (const DKey& bk : basis) {
        LieDerivation d = LieDerivation::single(n, bk.dual, bk.w);
        LieElement img = apply_lie_derivation(d, om);
        std::vector<std::pair<int, Int>> col;
        for (const auto& [w, c] : img.terms()) col.emplace_back(target_index(w), c);
        columns.push_back(std::move(col));
    }

    std::vector<std::vector<Int>> ker = int_kernel(int(target.size()), columns);
    std::vector<LieDerivation> out;
    out.reserve(ker.size());
    for (const auto& v : ker) {
        std::vector<DTerms::Term> raw;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (v[j] != 0) raw.emplace_back(basis[j], v[j]);
        out.emplace_back(n, k, DTerms::from_raw(std::move(raw)));
    }
    return out;
}

}  // namespace derilab
