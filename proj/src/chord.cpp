#include "derilab/chord.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace derilab {

namespace {

std::map<Color, int> color_counts(const ColorWord& w) {
    std::map<Color, int> cnt;
    for (Color c : w) ++cnt[c];
    return cnt;
}

int count_of(const std::map<Color, int>& cnt, Color c) {
    auto it = cnt.find(c);
    return it == cnt.end() ? 0 : it->second;
}

}  // namespace

ChordDiagram chord_diagram_of(const Spider& s, int g) {
    ChordDiagram c{g, s, {}, std::vector<int>(s.length(), 0)};
    const ColorWord& w = s.colors();
    for (int i = 0; i < s.length(); ++i)
        for (int j = i + 1; j < s.length(); ++j)
            if (int(w[i]) == -int(w[j])) {
                c.chords.emplace_back(i, j);
                ++c.chord_degree[i];
                ++c.chord_degree[j];
            }
    return c;
}

int multiplicity(const ChordDiagram& c) {
    int chorded = 0;
    for (int d : c.chord_degree)
        if (d > 0) ++chorded;
    return 2 * int(c.chords.size()) - chorded;
}

int multiplicity_of_colors(const ColorWord& w) {
    auto cnt = color_counts(w);
    int chords = 0, chorded = 0;
    for (const auto& [c, n] : cnt) {
        if (c < 0) continue;
        int m = count_of(cnt, Color(-c));
        chords += n * m;
        if (m > 0) chorded += n + m;
    }
    return 2 * chords - chorded;
}

std::vector<VertexClass> classify_vertices(const ChordDiagram& c) {
    const ColorWord& w = c.spider.colors();
    auto cnt = color_counts(w);
    std::vector<VertexClass> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int own = cnt[w[i]];
        int opp = count_of(cnt, Color(-w[i]));
        if (opp == 0)
            out[i] = VertexClass::Unpaired;
        else if (own == 1 && opp == 1)
            out[i] = VertexClass::SinglePaired;
        else
            out[i] = VertexClass::MultiplePaired;
    }
    return out;
}

std::optional<Arc> is_separable(const ChordDiagram& c) {
    const int n = c.spider.length();
    for (int g1 = 0; g1 < n; ++g1) {
        for (int g2 = g1 + 1; g2 < n; ++g2) {
            int r1 = g2 - g1;
            if (r1 < 2 || n - r1 < 2) continue;
            bool ok = true;
            for (const auto& [a, b] : c.chords) {
                bool a_in = a > g1 && a <= g2;
                bool b_in = b > g1 && b <= g2;
                if (a_in != b_in) {
                    ok = false;
                    break;
                }
            }
            if (ok) return Arc{g1, g2};
        }
    }
    return std::nullopt;
}

std::pair<Spider, Spider> split_separable(const ChordDiagram& c, const Arc& arc, Color fresh) {
    const ColorWord& w = c.spider.colors();
    const int n = int(w.size());
    auto cnt = color_counts(w);
    if (fresh == 0 || count_of(cnt, fresh) || count_of(cnt, Color(-fresh)))
        throw range_error("split_separable: color is not fresh");
    check_color(c.g, fresh);
    ColorWord a, b;
    for (int t = arc.gap1 + 1; t <= arc.gap2; ++t) a.push_back(w[t % n]);
    for (int t = arc.gap2 + 1; t <= arc.gap1 + n; ++t) b.push_back(w[t % n]);
    a.push_back(fresh);
    ColorWord bb{Color(-fresh)};
    bb.insert(bb.end(), b.begin(), b.end());
    return {Spider(std::move(a), c.g), Spider(std::move(bb), c.g)};
}

namespace {

// Try to read the word, rotated to start at r, as a standard-form pattern.
std::optional<StandardForm> match_pattern_at(const ColorWord& w, int r, int pattern) {
    const int n = int(w.size());
    int extras = pattern == 1 ? 2 : (pattern == 4 ? 0 : 1);
    if ((n - extras) % 2 != 0) return std::nullopt;
    int m = (n - extras) / 2;
    if (m < 1) return std::nullopt;
    auto at = [&](int i) { return w[(r + i) % n]; };
    // chain prefix c1, c2, -c1, c3, -c2, ..., cm, -c_{m-1} occupies 2m-1
    // slots, then [d1], -cm, [d2]
    std::vector<Color> chain(m);
    chain[0] = at(0);
    for (int t = 1; t < m; ++t) chain[t] = at(2 * t - 1);
    for (int t = 1; t < m; ++t)
        if (int(at(2 * t)) != -int(chain[t - 1])) return std::nullopt;
    int pos = 2 * m - 1;
    std::vector<Color> whites;
    if (pattern == 1 || pattern == 2) whites.push_back(at(pos++));
    if (int(at(pos++)) != -int(chain[m - 1])) return std::nullopt;
    if (pattern == 1 || pattern == 3) whites.push_back(at(pos++));
    if (pos != n) return std::nullopt;
    // signed chain colors and whites mutually distinct, whites unpaired
    std::vector<int> seen;
    for (Color c : chain) {
        seen.push_back(c);
        seen.push_back(-c);
    }
    for (Color d : whites) {
        seen.push_back(d);
        seen.push_back(-int(d));  // forbids a chord between or into the whites
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
    return StandardForm{pattern, std::move(chain), std::move(whites)};
}

}  // namespace

std::optional<StandardForm> is_standard_form(const ChordDiagram& c) {
    const ColorWord& w = c.spider.colors();
    for (int r = 0; r < int(w.size()); ++r)
        for (int pattern = 1; pattern <= 4; ++pattern)
            if (auto sf = match_pattern_at(w, r, pattern)) return sf;
    return std::nullopt;
}

Color fresh_color(const ColorWord& w, int g) {
    auto cnt = color_counts(w);
    for (int c = 1; c <= g; ++c)
        if (!count_of(cnt, Color(c)) && !count_of(cnt, Color(-c))) return Color(c);
    throw range_error("no fresh color available at genus " + std::to_string(g));
}

bool audit_certificate(const ReductionCertificate& cert) {
    TensorElement acc = spider_to_tensor(cert.input, cert.g);
    for (const auto& bt : cert.brackets) {
        AssocDerivation dl =
            derivation_of_invariant_tensor(spider_to_tensor(bt.left, cert.g), cert.g);
        AssocDerivation dr =
            derivation_of_invariant_tensor(spider_to_tensor(bt.right, cert.g), cert.g);
        acc = acc - tensor_of_derivation(bracket_assoc(dl, dr), cert.g) * bt.coeff;
    }
    for (const auto& st : cert.remainder)
        acc = acc - spider_to_tensor(st.s, cert.g) * st.coeff;
    return acc.is_zero();
}

namespace {

ColorWord rotate_to(const ColorWord& w, int start) {
    ColorWord r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[(start + i) % w.size()];
    return r;
}

ColorWord cat(std::initializer_list<ColorWord> parts) {
    ColorWord r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

}  // namespace

ReductionCertificate chord_slide(const Spider& s, int site, Color fresh, int g) {
    const ColorWord& w = s.colors();
    const int n = int(w.size());
    if (site < 0 || site >= n) throw range_error("chord_slide: bad site");
    auto cnt = color_counts(w);
    if (fresh == 0 || count_of(cnt, fresh) || count_of(cnt, Color(-fresh)))
        throw range_error("chord_slide: color is not fresh");
    check_color(g, fresh);

    const Color i = w[site], j = w[(site + 1) % n];
    auto vclass = [&](Color c) {
        int opp = count_of(cnt, Color(-c));
        if (opp == 0) return VertexClass::Unpaired;
        if (opp == 1 && count_of(cnt, c) == 1) return VertexClass::SinglePaired;
        return VertexClass::MultiplePaired;
    };
    if (vclass(i) != VertexClass::SinglePaired)
        throw range_error("chord_slide: site shape not covered");

    ColorWord q = rotate_to(w, site);  // q[0] = i, q[1] = j
    const Int sn = color_sign(fresh);
    const Int si = color_sign(i);
    const Int sj = color_sign(j);
    ColorWord N{fresh}, Nneg{Color(-fresh)}, I{i}, Ineg{Color(-i)}, J{j}, Jneg{Color(-j)};

    ReductionCertificate cert;
    cert.g = g;
    cert.input = s;
    cert.fresh_log.push_back(fresh);
    cert.input_multiplicity = multiplicity_of_colors(w);
    cert.max_multiplicity = cert.input_multiplicity;

    auto pos_of = [&](Color c) {
        for (int t = 2; t < n; ++t)
            if (q[t] == c) return t;
        throw range_error("chord_slide: partner not found");
    };

    if (vclass(j) == VertexClass::SinglePaired) {
        int a = pos_of(Color(-j));
        int b = pos_of(Color(-i));
        if (a < b) {
            // q = i j Y -j Z -i X
            ColorWord Y(q.begin() + 2, q.begin() + a);
            ColorWord Z(q.begin() + a + 1, q.begin() + b);
            ColorWord X(q.begin() + b + 1, q.end());
            cert.brackets.push_back(
                {Spider(cat({X, N, Y, Jneg, Z, Ineg}), g), Spider(cat({I, J, Nneg}), g), sn});
            cert.remainder.push_back({Spider(cat({X, N, Y, Jneg, Z, J, Nneg}), g), sn * si});
            cert.remainder.push_back({Spider(cat({X, N, Y, Nneg, I, Z, Ineg}), g), sn * sj});
        } else {
            // q = i j Y -i Z -j X
            ColorWord Y(q.begin() + 2, q.begin() + b);
            ColorWord Z(q.begin() + b + 1, q.begin() + a);
            ColorWord X(q.begin() + a + 1, q.end());
            cert.brackets.push_back(
                {Spider(cat({X, N, Y, Ineg, Z, Jneg}), g), Spider(cat({I, J, Nneg}), g), sn});
            cert.remainder.push_back({Spider(cat({X, N, Y, J, Nneg, Z, Jneg}), g), sn * si});
            cert.remainder.push_back({Spider(cat({X, N, Y, Ineg, Z, Nneg, I}), g), sn * sj});
        }
    } else if (vclass(j) == VertexClass::Unpaired) {
        int b = pos_of(Color(-i));
        ColorWord Y(q.begin() + 2, q.begin() + b);
        ColorWord X(q.begin() + b + 1, q.end());
        cert.brackets.push_back(
            {Spider(cat({X, N, Y, Ineg}), g), Spider(cat({I, J, Nneg}), g), sn});
        cert.remainder.push_back({Spider(cat({X, N, Y, J, Nneg}), g), sn * si});
    } else {
        throw range_error("chord_slide: site shape not covered");
    }
    for (const auto& st : cert.remainder)
        cert.max_multiplicity =
            std::max(cert.max_multiplicity, multiplicity_of_colors(st.s.colors()));
    cert.steps = 1;
    return cert;
}

Spider mirror(const Spider& s, int g) {
    ColorWord w = s.colors();
    std::reverse(w.begin(), w.end());
    return Spider(std::move(w), g);
}

int inner_boundary_components(const ChordDiagram& c) {
    auto sf = is_standard_form(c);
    if (!sf) throw range_error("inner_boundary_components: diagram is not standard form");
    if (int(sf->chain.size()) < 2)
        throw range_error("inner_boundary_components: need at least 2 chords");
    // walk the inner rim between chorded vertices; crossing a band from the
    // incoming side of a vertex emerges on the outgoing side of its partner
    std::vector<int> chorded;
    const ColorWord& w = c.spider.colors();
    for (int t = 0; t < int(w.size()); ++t)
        if (c.chord_degree[t] > 0) chorded.push_back(t);
    const int r = int(chorded.size());
    std::vector<int> partner(r, -1);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            if (int(w[chorded[a]]) == -int(w[chorded[b]])) partner[a] = b;
    std::vector<bool> seen(r, false);
    int comps = 0;
    for (int t0 = 0; t0 < r; ++t0) {
        if (seen[t0]) continue;
        ++comps;
        int t = t0;
        while (!seen[t]) {
            seen[t] = true;
            t = partner[(t + 1) % r];
        }
    }
    return comps;
}

namespace {

struct ReduceDriver {
    int g;
    int m0;
    int len;
    long long budget;
    ReductionCertificate cert;
    std::vector<ConfigurationState> stack;

    void push_child(ColorWord word, int l, int xlen, Int coeff, int backward) {
        int m = multiplicity_of_colors(word);
        if (m > m0)
            throw oracle_error("reduce_to_standard: multiplicity exceeded the input multiplicity");
        if (backward > m0)
            throw oracle_error("reduce_to_standard: multiple-paired rewrites exceeded multiplicity");
        cert.max_multiplicity = std::max(cert.max_multiplicity, m);
        cert.max_backward_steps = std::max(cert.max_backward_steps, backward);
        stack.push_back(ConfigurationState{std::move(word), l, xlen, std::move(coeff), backward});
    }

    void validate(const ConfigurationState& st) const {
        const ColorWord& w = st.word;
        const int l = st.chain_len;
        if (l == 0) return;
        if (2 * l + st.xlen > int(w.size()) || st.xlen < 0)
            throw oracle_error("reduce_to_standard: inconsistent parse state");
        std::vector<Color> chain(l);
        chain[0] = w[0];
        for (int t = 1; t < l; ++t) chain[t] = w[2 * t - 1];
        for (int t = 1; t < l; ++t)
            if (int(w[2 * t]) != -int(chain[t - 1]))
                throw oracle_error("reduce_to_standard: chain prefix mismatch");
        if (int(w[2 * l - 1 + st.xlen]) != -int(chain[l - 1]))
            throw oracle_error("reduce_to_standard: chain closing color mismatch");
        for (int t = 2 * l - 1; t < int(w.size()); ++t) {
            if (t == 2 * l - 1 + st.xlen) continue;
            for (Color cc : chain)
                if (w[t] == cc || int(w[t]) == -int(cc))
                    throw oracle_error("reduce_to_standard: chain color inside X or Y");
        }
    }

    void run(const Spider& input) {
        stack.push_back(ConfigurationState{input.colors(), 0, -1, 1, 0});
        while (!stack.empty()) {
            if (++cert.steps > budget)
                throw range_error("reduce_to_standard: step budget exceeded");
            ConfigurationState st = std::move(stack.back());
            stack.pop_back();
            validate(st);
            step(st);
        }
    }

    void step(const ConfigurationState& st) {
        const ColorWord& w = st.word;
        Spider sp(w, g);
        ChordDiagram cd = chord_diagram_of(sp, g);
        if (is_standard_form(cd)) {
            cert.remainder.push_back({sp, st.coeff});
            return;
        }
        if (auto arc = is_separable(cd)) {
            Color n = fresh_color(sp.colors(), g);
            cert.fresh_log.push_back(n);
            auto [left, right] = split_separable(cd, *arc, n);
            cert.brackets.push_back({left, right, st.coeff});
            return;
        }
        if (st.chain_len == 0) {
            start_state(st);
            return;
        }
        chain_state(st);
    }

    // No parse yet: either rotate a single-paired chord to the front, or
    // apply the adjacent-pair rewrite to create one.
    void start_state(const ConfigurationState& st) {
        const ColorWord& w = st.word;
        auto cnt = color_counts(w);
        for (int t = 0; t < int(w.size()); ++t) {
            if (count_of(cnt, w[t]) == 1 && count_of(cnt, Color(-w[t])) == 1) {
                ColorWord rot = rotate_to(w, t);
                int xlen = -1;
                for (int u = 1; u < int(rot.size()); ++u)
                    if (int(rot[u]) == -int(rot[0])) xlen = u - 1;
                push_child(std::move(rot), 1, xlen, st.coeff, st.backward);
                return;
            }
        }
        // no single-paired chord: rewrite S(i, j, X) with i, j adjacent
        const Color i = w[0], j = w[1];
        ColorWord X(w.begin() + 2, w.end());
        Color n = fresh_color(w, g);
        cert.fresh_log.push_back(n);
        ColorWord left = X;
        left.push_back(n);
        cert.brackets.push_back(
            {Spider(std::move(left), g), Spider(ColorWord{Color(-n), i, j}, g), st.coeff});
        for (int t = 0; t < int(X.size()); ++t) {
            ColorWord X1(X.begin(), X.begin() + t), X2(X.begin() + t + 1, X.end());
            if (int(X[t]) == -int(i)) {
                ColorWord child = cat({{n}, X1, {j, Color(-n)}, X2});
                push_child(std::move(child), 1, int(X1.size()) + 1, st.coeff * color_sign(i),
                           st.backward);
            }
            if (int(X[t]) == -int(j)) {
                ColorWord child = cat({{n}, X1, {Color(-n), i}, X2});
                push_child(std::move(child), 1, int(X1.size()), st.coeff * color_sign(j),
                           st.backward);
            }
        }
    }

    // Parsed as chain ++ X ++ (-c_l) ++ Y.
    void chain_state(const ConfigurationState& st) {
        const ColorWord& w = st.word;
        const int l = st.chain_len;
        const int xlen = st.xlen;
        const int xstart = 2 * l - 1;
        ColorWord P(w.begin(), w.begin() + xstart);
        ColorWord X(w.begin() + xstart, w.begin() + xstart + xlen);
        const Color cl_neg = w[xstart + xlen];
        ColorWord Y(w.begin() + xstart + xlen + 1, w.end());
        if (xlen == 0)
            throw oracle_error("reduce_to_standard: empty X escaped the terminal checks");

        if (xlen >= 2) {
            Color n = fresh_color(w, g);
            cert.fresh_log.push_back(n);
            cert.brackets.push_back({Spider(cat({P, {n, cl_neg}, Y}), g),
                                     Spider(cat({{Color(-n)}, X}), g), st.coeff});
            for (int u = 0; u < int(Y.size()); ++u) {
                for (int v = 0; v < int(X.size()); ++v) {
                    if (int(X[v]) != -int(Y[u])) continue;
                    ColorWord Y1(Y.begin(), Y.begin() + u), Y2(Y.begin() + u + 1, Y.end());
                    ColorWord X1(X.begin(), X.begin() + v), X2(X.begin() + v + 1, X.end());
                    ColorWord child = cat({P, {n, cl_neg}, Y1, X2, {Color(-n)}, X1, Y2});
                    push_child(std::move(child), l + 1, int(Y1.size()) + int(X2.size()),
                               st.coeff * (-color_sign(Y[u])), st.backward);
                }
            }
            return;
        }

        // X has exactly one vertex
        const Color cv = X[0];
        auto cnt = color_counts(w);
        const int opp = count_of(cnt, Color(-cv));
        if (opp == 0)
            throw oracle_error("reduce_to_standard: unpaired X escaped the terminal checks");
        if (opp == 1 && count_of(cnt, cv) == 1) {
            // single paired: absorb into the chain, no rewriting
            int upos = -1;
            for (int u = 0; u < int(Y.size()); ++u)
                if (int(Y[u]) == -int(cv)) upos = u;
            push_child(st.word, l + 1, upos, st.coeff, st.backward);
            return;
        }
        // multiple paired
        Color n = fresh_color(w, g);
        cert.fresh_log.push_back(n);
        cert.brackets.push_back({Spider(cat({P, {cv, cl_neg, n}}), g),
                                 Spider(cat({{Color(-n)}, Y}), g), st.coeff});
        for (int u = 0; u < int(Y.size()); ++u) {
            if (int(Y[u]) != -int(cv)) continue;
            ColorWord Y1(Y.begin(), Y.begin() + u), Y2(Y.begin() + u + 1, Y.end());
            Int cc = st.coeff * (-color_sign(cv));
            if (l >= 2) {
                ColorWord child = cat({P, Y2, {Color(-n)}, Y1, {cl_neg, n}});
                push_child(std::move(child), l - 1, 1, std::move(cc), st.backward + 1);
            } else {
                // the chain restarts as (-c1, n)
                ColorWord child = cat({{cl_neg, n, Color(-cl_neg)}, Y2, {Color(-n)}, Y1});
                push_child(std::move(child), 2, int(Y2.size()), std::move(cc), st.backward + 1);
            }
        }
    }
};

}  // namespace

ReductionCertificate reduce_to_standard(const Spider& s, int g) {
    const int k = s.degree();
    if (k < 3 || g < k + 3)
        throw range_error(
            "reduce_to_standard: requires g >= degree + 3 and degree >= 3 (got degree " +
            std::to_string(k) + ", g " + std::to_string(g) + ")");
    ReduceDriver drv{g, multiplicity_of_colors(s.colors()), s.length(), 0, {}, {}};
    drv.cert.g = g;
    drv.cert.input = s;
    drv.cert.input_multiplicity = drv.m0;
    drv.cert.max_multiplicity = drv.m0;
    drv.budget = 4096ll * (drv.len + drv.m0 + 1) * (drv.len + drv.m0 + 1);
    drv.run(s);
    return drv.cert;
}

ReductionCertificate chord_cycle(const Spider& s, int g) {
    ChordDiagram cd0 = chord_diagram_of(s, g);
    auto sf = is_standard_form(cd0);
    if (!sf) throw range_error("chord_cycle: input must be of standard form");
    const int m = int(sf->chain.size());
    if (m < 2) throw range_error("chord_cycle: need at least 2 chords");

    ReductionCertificate cert;
    cert.g = g;
    cert.input = s;
    cert.input_multiplicity = multiplicity_of_colors(s.colors());
    cert.max_multiplicity = cert.input_multiplicity;

    Spider current = s;
    Spider previous = s;
    Color mark = sf->chain[0];
    Int coeff = 1;
    const int budget = 4 * m + 8;
    for (int step = 0; step < budget; ++step) {
        ChordDiagram cd = chord_diagram_of(current, g);
        if (step > 0 && is_separable(cd)) break;
        // slide at a site whose left vertex belongs to the marked chord
        const ColorWord& w = current.colors();
        const int n = int(w.size());
        auto cnt = color_counts(w);
        int site = -1;
        for (int t = 0; t < n; ++t) {
            if (std::abs(int(w[t])) != std::abs(int(mark))) continue;
            Color jj = w[(t + 1) % n];
            if (std::abs(int(jj)) == std::abs(int(mark))) continue;
            bool j_single = count_of(cnt, jj) == 1 && count_of(cnt, Color(-jj)) == 1;
            bool j_unpaired = count_of(cnt, Color(-jj)) == 0;
            if (j_single || j_unpaired) {
                site = t;
                break;
            }
        }
        if (site < 0) break;
        // a fresh color may not collide with the current word, nor with the
        // previous one: reusing a color just retired would undo the slide
        Color n_fresh = 0;
        for (int c = 1; c <= g && n_fresh == 0; ++c) {
            bool clash = false;
            for (Color cc : current.colors())
                if (std::abs(int(cc)) == c) clash = true;
            for (Color cc : previous.colors())
                if (std::abs(int(cc)) == c) clash = true;
            if (!clash) n_fresh = Color(c);
        }
        if (n_fresh == 0) break;  // the genus ran out of spare colors
        ReductionCertificate frag = chord_slide(current, site, n_fresh, g);
        cert.fresh_log.push_back(n_fresh);
        for (auto bt : frag.brackets) {
            bt.coeff = bt.coeff * coeff;
            cert.brackets.push_back(std::move(bt));
        }
        // continuation: the correction still carrying the marked chord, or
        // the unique correction with the mark renamed to the fresh color
        int cont = -1;
        for (std::size_t idx = 0; idx < frag.remainder.size(); ++idx) {
            const ColorWord& cw = frag.remainder[idx].s.colors();
            int cnt_mark = 0;
            for (Color c : cw)
                if (std::abs(int(c)) == std::abs(int(mark))) ++cnt_mark;
            if (cnt_mark == 2) {
                cont = int(idx);
                break;
            }
        }
        if (cont < 0) {
            cont = 0;
            mark = n_fresh;
        }
        for (std::size_t idx = 0; idx < frag.remainder.size(); ++idx) {
            if (int(idx) == cont) continue;
            SpiderTerm t = frag.remainder[idx];
            t.coeff = t.coeff * coeff;
            cert.remainder.push_back(std::move(t));
            cert.max_multiplicity = std::max(
                cert.max_multiplicity, multiplicity_of_colors(cert.remainder.back().s.colors()));
        }
        coeff = coeff * frag.remainder[cont].coeff;
        previous = current;
        current = frag.remainder[cont].s;
    }
    cert.remainder.push_back({current, coeff});
    return cert;
}

}  // namespace derilab
