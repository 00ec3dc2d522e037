#include "derilab/homology.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "derilab/lyndon.hpp"
#include "derilab/report.hpp"

namespace derilab {

const std::vector<std::uint32_t> kDefaultPrimes = {998244353u, 1004535809u, 1073741789u};

AlgebraKind parse_algebra(const std::string& s) {
    if (s == "assoc") return AlgebraKind::Assoc;
    if (s == "lie") return AlgebraKind::Lie;
    if (s == "symp") return AlgebraKind::Symp;
    if (s == "lie-symp") return AlgebraKind::LieSymp;
    throw range_error("unknown algebra: " + s);
}

std::string algebra_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Assoc: return "assoc";
        case AlgebraKind::Lie: return "lie";
        case AlgebraKind::Symp: return "symp";
        case AlgebraKind::LieSymp: return "lie-symp";
    }
    return "?";
}

Ring parse_ring(const std::string& s) {
    if (s == "z") return Ring::Z;
    if (s == "q") return Ring::Q;
    if (s == "modp") return Ring::ModP;
    throw range_error("unknown ring: " + s);
}

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::Z: return "z";
        case Ring::Q: return "q";
        case Ring::ModP: return "modp";
    }
    return "?";
}

std::vector<Partition> plus_partitions(int k) {
    std::vector<Partition> out;
    for (int q = 1; 2 * q <= k; ++q) out.push_back({k - q, q});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> full_partitions(int k) {
    std::vector<Partition> out = plus_partitions(k);
    out.push_back({k, 0});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> parse_partitions(const std::string& text) {
    std::vector<Partition> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto comma = item.find(',');
        if (comma == std::string::npos) throw range_error("bad partition: " + item);
        int p = std::stoi(item.substr(0, comma));
        int q = std::stoi(item.substr(comma + 1));
        if (p < q) std::swap(p, q);
        if (q < 0) throw range_error("bad partition: " + item);
        out.push_back({p, q});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw range_error("no partitions given");
    return out;
}

std::string partitions_str(const std::vector<Partition>& parts) {
    std::string s;
    for (const auto& pt : parts) {
        if (!s.empty()) s += ';';
        s += std::to_string(pt.p) + "," + std::to_string(pt.q);
    }
    return s;
}

namespace {

std::uint64_t weight_key(const WeightVec& w) {
    // packed 6-bit biased coordinates; sizes and degrees are range-guarded
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int v = w[i] + 32;
        if (v < 0 || v > 63) throw range_error("weight out of packing range");
        key |= std::uint64_t(v) << (6 * i);
    }
    return key;
}

long long ipow_ll(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

// ---------------------------------------------------------------- assoc

class AssocModel final : public GradedModel {
  public:
    explicit AssocModel(int n) : n_(n) {
        if (n < 2 || n > 10) throw range_error("assoc model: rank must be in 2..10");
    }
    int size() const override { return n_; }
    long long row_dim(int k) override {
        if (k < 0 || k > 8) throw range_error("assoc model: degree out of range");
        return ipow_ll(n_, k + 2);
    }
    long long module_dim(int k) override { return row_dim(k); }
    long long gen_count(int k) override { return row_dim(k); }

    WeightVec row_weight(int k, long long row) override {
        WeightVec w(n_, 0);
        long long base = ipow_ll(n_, k + 1);
        long long wordval = row % base;
        int dual = int(row / base);
        for (int t = 0; t <= k; ++t) {
            w[int(wordval % n_)] += 1;
            wordval /= n_;
        }
        w[dual] -= 1;
        return w;
    }
    WeightVec gen_weight(int k, long long i) override { return row_weight(k, i); }

    SparseCol bracket_column(int p, long long i, int q, long long j) override {
        std::array<int, 16> u{}, v{}, w{};
        int lf = decode(p, i, u);
        int lg = decode(q, j, v);
        SparseCol col;
        for (int s = 0; s <= q; ++s) {
            if (v[s] != lf) continue;
            int pos = 0;
            for (int t = 0; t < s; ++t) w[pos++] = v[t];
            for (int t = 0; t <= p; ++t) w[pos++] = u[t];
            for (int t = s + 1; t <= q; ++t) w[pos++] = v[t];
            col.emplace_back(encode(p + q, lg, w), 1);
        }
        for (int t = 0; t <= p; ++t) {
            if (u[t] != lg) continue;
            int pos = 0;
            for (int s = 0; s < t; ++s) w[pos++] = u[s];
            for (int s = 0; s <= q; ++s) w[pos++] = v[s];
            for (int s = t + 1; s <= p; ++s) w[pos++] = u[s];
            col.emplace_back(encode(p + q, lf, w), -1);
        }
        return collect(std::move(col));
    }

    std::uint64_t basis_digest(int k) override {
        Fnv1a h;
        h.feed_str("assoc");
        h.feed_i64(n_);
        h.feed_i64(k);
        h.feed_i64(row_dim(k));
        return h.digest();
    }
    void prepare(int) override {}

    static SparseCol collect(SparseCol col) {
        std::sort(col.begin(), col.end());
        SparseCol out;
        for (auto& [r, c] : col) {
            if (!out.empty() && out.back().first == r)
                out.back().second += c;
            else
                out.emplace_back(r, c);
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](auto& t) { return t.second == 0; }),
                  out.end());
        return out;
    }

  private:
    int decode(int k, long long index, std::array<int, 16>& word) const {
        long long base = ipow_ll(n_, k + 1);
        int dual = int(index / base);
        long long wv = index % base;
        for (int t = k; t >= 0; --t) {
            word[t] = int(wv % n_);
            wv /= n_;
        }
        return dual;
    }
    long long encode(int k, int dual, const std::array<int, 16>& word) const {
        long long wv = 0;
        for (int t = 0; t <= k; ++t) wv = wv * n_ + word[t];
        return dual * ipow_ll(n_, k + 1) + wv;
    }
    int n_;
};

// ---------------------------------------------------------------- lie

class LieModel final : public GradedModel {
  public:
    explicit LieModel(int n) : n_(n) {
        if (n < 2 || n > 10) throw range_error("lie model: rank must be in 2..10");
    }
    int size() const override { return n_; }
    long long row_dim(int k) override {
        if (k < 0 || k > 8) throw range_error("lie model: degree out of range");
        return n_ * witt_dimension(n_, k + 1);
    }
    long long module_dim(int k) override { return row_dim(k); }
    long long gen_count(int k) override { return row_dim(k); }

    WeightVec row_weight(int k, long long row) override {
        const auto& b = degree(k);
        WeightVec w(n_, 0);
        const Word& word = b.words[row % b.words.size()];
        int dual = int(row / b.words.size());
        for (Letter l : word) w[l - 1] += 1;
        w[dual] -= 1;
        return w;
    }
    WeightVec gen_weight(int k, long long i) override { return row_weight(k, i); }

    SparseCol bracket_column(int p, long long i, int q, long long j) override {
        const auto& bp = degree(p);
        const auto& bq = degree(q);
        LieDerivation f = LieDerivation::single(n_, Letter(1 + i / bp.words.size()),
                                                bp.words[i % bp.words.size()]);
        LieDerivation gd = LieDerivation::single(n_, Letter(1 + j / bq.words.size()),
                                                 bq.words[j % bq.words.size()]);
        LieDerivation br = bracket_lie_der(f, gd);
        const auto& bk = degree(p + q);
        SparseCol col;
        for (const auto& [key, c] : br.terms().terms())
            col.emplace_back((key.dual - 1) * (long long)bk.words.size() + bk.index_of(key.w),
                             to_ll(c));
        std::sort(col.begin(), col.end());
        return col;
    }

    std::uint64_t basis_digest(int k) override {
        const auto& b = degree(k);
        Fnv1a h;
        h.feed_str("lie");
        h.feed_i64(n_);
        h.feed_i64(k);
        for (const auto& w : b.words) h.feed_bytes(w.data(), w.size());
        return h.digest();
    }
    void prepare(int k) override { degree(k); }

  private:
    struct DegreeBasis {
        std::vector<Word> words;
        long long index_of(const Word& w) const {
            auto it = std::lower_bound(words.begin(), words.end(), w);
            if (it == words.end() || *it != w) throw oracle_error("lie model: unknown basis word");
            return it - words.begin();
        }
    };
    const DegreeBasis& degree(int k) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = degrees_.find(k);
        if (it == degrees_.end())
            it = degrees_.emplace(k, DegreeBasis{lyndon_basis(n_, k + 1)}).first;
        return it->second;
    }
    int n_;
    std::mutex mu_;
    std::map<int, DegreeBasis> degrees_;
};

// ---------------------------------------------------------------- symp

std::uint64_t pack_colorword(const ColorWord& w) {
    if (w.size() > 8) throw range_error("symp model: degree out of packing range");
    std::uint64_t key = 0;
    for (std::size_t t = 0; t < w.size(); ++t)
        key |= std::uint64_t(std::uint8_t(w[t])) << (8 * t);
    return key;
}

class SympModel final : public GradedModel {
  public:
    explicit SympModel(int g) : g_(g) {
        if (g < 1 || g > 10) throw range_error("symp model: genus must be in 1..10");
    }
    int size() const override { return g_; }
    long long row_dim(int k) override {
        if (k < 0 || k > 6) throw range_error("symp model: degree out of range");
        return a_dimension(g_, k);
    }
    long long module_dim(int k) override { return row_dim(k); }
    long long gen_count(int k) override { return row_dim(k); }

    WeightVec row_weight(int k, long long row) override {
        const auto& b = degree(k);
        WeightVec w(g_, 0);
        for (Color c : b.words[row]) w[std::abs(int(c)) - 1] += color_sign(c);
        return w;
    }
    WeightVec gen_weight(int k, long long i) override { return row_weight(k, i); }

    SparseCol bracket_column(int p, long long i, int q, long long j) override {
        const auto& bp = degree(p);
        const auto& bq = degree(q);
        const ColorWord& wa = bp.words[i];
        const ColorWord& wb = bq.words[j];
        const int la = int(wa.size()), lb = int(wb.size());
        const int da = primitive_period(wa), db = primitive_period(wb);
        const auto& bk = degree(p + q);
        SparseCol col;
        ColorWord splice(la + lb - 2);
        for (int a = 0; a < da; ++a) {
            for (int b = 0; b < db; ++b) {
                if (int(wb[b]) != -int(wa[a])) continue;
                int pos = 0;
                for (int t = 1; t < la; ++t) splice[pos++] = wa[(a + t) % la];
                for (int t = 1; t < lb; ++t) splice[pos++] = wb[(b + t) % lb];
                ColorWord canon = Spider::canonical_rotation(splice);
                long long stab = (la + lb - 2) / primitive_period(canon);
                col.emplace_back(bk.index_of(canon), color_sign(wa[a]) * stab);
            }
        }
        return AssocModel::collect(std::move(col));
    }

    std::uint64_t basis_digest(int k) override {
        const auto& b = degree(k);
        Fnv1a h;
        h.feed_str("symp");
        h.feed_i64(g_);
        h.feed_i64(k);
        for (const auto& w : b.words) h.feed_bytes(w.data(), w.size());
        return h.digest();
    }
    void prepare(int k) override { degree(k); }

  private:
    struct DegreeBasis {
        std::vector<ColorWord> words;
        std::unordered_map<std::uint64_t, long long> index;
        long long index_of(const ColorWord& w) const {
            auto it = index.find(pack_colorword(w));
            if (it == index.end()) throw oracle_error("symp model: unknown necklace");
            return it->second;
        }
    };
    const DegreeBasis& degree(int k) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = degrees_.find(k);
        if (it == degrees_.end()) {
            DegreeBasis b;
            for (const Spider& s : a_basis(g_, k)) b.words.push_back(s.colors());
            for (std::size_t t = 0; t < b.words.size(); ++t)
                b.index.emplace(pack_colorword(b.words[t]), (long long)t);
            if ((long long)b.words.size() != a_dimension(g_, k))
                throw oracle_error("symp model: necklace count mismatch");
            it = degrees_.emplace(k, std::move(b)).first;
        }
        return it->second;
    }
    int g_;
    std::mutex mu_;
    std::map<int, DegreeBasis> degrees_;
};

// ---------------------------------------------------------------- lie-symp

class LieSympModel final : public GradedModel {
  public:
    explicit LieSympModel(int g) : g_(g) {
        if (g < 1 || g > 4) throw range_error("lie-symp model: genus must be in 1..4");
    }
    int size() const override { return g_; }
    long long row_dim(int k) override {
        if (k < 1 || k > 6) throw range_error("lie-symp model: degree out of range");
        return 2ll * g_ * witt_dimension(2 * g_, k + 1);
    }
    long long module_dim(int k) override { return (long long)degree(k).elements.size(); }
    long long gen_count(int k) override { return module_dim(k); }

    WeightVec row_weight(int k, long long row) override {
        const auto& b = degree(k);
        WeightVec w(g_, 0);
        const Word& word = b.words[row % b.words.size()];
        int dual = int(1 + row / b.words.size());
        for (Letter l : word) w[(int(l) - 1) % g_] += int(l) <= g_ ? 1 : -1;
        w[(dual - 1) % g_] -= dual <= g_ ? 1 : -1;
        return w;
    }
    WeightVec gen_weight(int k, long long i) override { return degree(k).weights[i]; }

    SparseCol bracket_column(int p, long long i, int q, long long j) override {
        const auto& bp = degree(p);
        const auto& bq = degree(q);
        LieDerivation br = bracket_lie_der(bp.elements[i], bq.elements[j]);
        const auto& bk = degree(p + q);
        SparseCol col;
        for (const auto& [key, c] : br.terms().terms())
            col.emplace_back((key.dual - 1) * (long long)bk.words.size() + bk.index_of(key.w),
                             to_ll(c));
        std::sort(col.begin(), col.end());
        return col;
    }

    std::uint64_t basis_digest(int k) override {
        const auto& b = degree(k);
        Fnv1a h;
        h.feed_str("lie-symp");
        h.feed_i64(g_);
        h.feed_i64(k);
        for (const auto& el : b.elements)
            for (const auto& [key, c] : el.terms().terms()) {
                h.feed_i64(key.dual);
                h.feed_bytes(key.w.data(), key.w.size());
                h.feed_str(c.str());
            }
        return h.digest();
    }
    void prepare(int k) override { degree(k); }

  private:
    struct DegreeBasis {
        std::vector<Word> words;  // ambient Lyndon words of length k+1
        std::vector<LieDerivation> elements;
        std::vector<WeightVec> weights;
        long long index_of(const Word& w) const {
            auto it = std::lower_bound(words.begin(), words.end(), w);
            if (it == words.end() || *it != w)
                throw oracle_error("lie-symp model: unknown basis word");
            return it - words.begin();
        }
    };
    const DegreeBasis& degree(int k) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = degrees_.find(k);
        if (it == degrees_.end()) {
            DegreeBasis b;
            b.words = lyndon_basis(2 * g_, k + 1);
            b.elements = h_basis(g_, k);
            for (const auto& el : b.elements) {
                WeightVec w(g_, 0);
                const auto& key = el.terms().terms().front().first;
                for (Letter l : key.w) w[(int(l) - 1) % g_] += int(l) <= g_ ? 1 : -1;
                w[(int(key.dual) - 1) % g_] -= int(key.dual) <= g_ ? 1 : -1;
                b.weights.push_back(std::move(w));
            }
            it = degrees_.emplace(k, std::move(b)).first;
        }
        return it->second;
    }
    int g_;
    std::mutex mu_;
    std::map<int, DegreeBasis> degrees_;
};

}  // namespace

std::unique_ptr<GradedModel> make_model(AlgebraKind kind, int size) {
    switch (kind) {
        case AlgebraKind::Assoc: return std::make_unique<AssocModel>(size);
        case AlgebraKind::Lie: return std::make_unique<LieModel>(size);
        case AlgebraKind::Symp: return std::make_unique<SympModel>(size);
        case AlgebraKind::LieSymp: return std::make_unique<LieSympModel>(size);
    }
    throw range_error("unknown algebra kind");
}

// ---------------------------------------------------------------- engine

namespace {

struct Block {
    WeightVec weight;
    long long dim = 0;
    long long rank = 0;
    bool early = false;
    std::vector<long long> rank_per_prime;
    std::vector<Int> divisors;
};

}  // namespace

SpanResult run_span(const SpanRequest& req) {
    auto t0 = std::chrono::steady_clock::now();
    auto model = make_model(req.kind, req.size);
    model->prepare(req.k);
    for (const auto& pt : req.partitions) {
        if (pt.p + pt.q != req.k) throw range_error("partition degrees must sum to k");
        model->prepare(pt.p);
        model->prepare(pt.q);
    }
    if (req.ring == Ring::ModP) {
        if (req.primes.empty()) throw range_error("modp ring needs at least one prime");
        for (auto p : req.primes)
            if (!is_prime_u64(p)) throw range_error("modulus is not prime: " + std::to_string(p));
    }

    const long long dim = model->row_dim(req.k);

    SpanResult res;
    res.module_dim = model->module_dim(req.k);
    res.row_dim = dim;
    {
        Fnv1a h;
        h.feed_u64(model->basis_digest(req.k));
        for (const auto& pt : req.partitions) {
            h.feed_i64(pt.p);
            h.feed_i64(pt.q);
            h.feed_u64(model->basis_digest(pt.p));
            h.feed_u64(model->basis_digest(pt.q));
        }
        res.basis_digest = h.digest();
    }

    // row blocks by torus weight
    std::unordered_map<std::uint64_t, int> block_of;
    std::vector<Block> blocks;
    std::vector<long long> row_local(dim);
    for (long long r = 0; r < dim; ++r) {
        WeightVec w = model->row_weight(req.k, r);
        auto key = weight_key(w);
        auto it = block_of.find(key);
        if (it == block_of.end()) {
            it = block_of.emplace(key, int(blocks.size())).first;
            blocks.push_back(Block{std::move(w), 0, 0, false, {}, {}});
        }
        row_local[r] = blocks[it->second].dim++;
    }
    res.block_count = (long long)blocks.size();

    // generator weight keys per degree, biased +16 per coordinate so that a
    // pair sum matches the +32-biased row key without cross-field carries
    std::map<int, std::vector<std::uint64_t>> gw_keys;
    for (const auto& pt : req.partitions)
        for (int d : {pt.p, pt.q}) {
            if (gw_keys.count(d)) continue;
            auto& v = gw_keys[d];
            long long n = model->gen_count(d);
            v.resize(std::size_t(n));
            for (long long i = 0; i < n; ++i) {
                WeightVec w = model->gen_weight(d, i);
                std::uint64_t key = 0;
                for (std::size_t t = 0; t < w.size(); ++t) {
                    int val = w[t] + 16;
                    if (val < 0 || val > 47) throw range_error("weight out of packing range");
                    key |= std::uint64_t(val) << (6 * t);
                }
                v[std::size_t(i)] = key;
            }
        }

    const int nw = std::max(1, req.workers);
    std::atomic<long long> columns{0};
    std::vector<std::string> errors(nw);

    auto pair_scan = [&](auto&& f) {
        for (std::size_t pi = 0; pi < req.partitions.size(); ++pi) {
            const Partition& pt = req.partitions[pi];
            const long long np = model->gen_count(pt.p);
            const long long nq = model->gen_count(pt.q);
            for (long long i = 0; i < np; ++i) {
                long long j0 = pt.p == pt.q ? i + 1 : 0;
                for (long long j = j0; j < nq; ++j)
                    if (!f(pt, i, j)) return;
            }
        }
    };

    auto worker = [&](int wid) {
        try {
            std::vector<int> mine;
            for (int b = 0; b < int(blocks.size()); ++b)
                if (b % nw == wid) mine.push_back(b);
            const double budget_bytes = 768.0 * 1024 * 1024 / nw;
            std::size_t lo = 0;
            long long my_columns = 0;
            while (lo < mine.size()) {
                double used = 0;
                std::size_t hi = lo;
                std::vector<char> in_batch(blocks.size(), 0);
                while (hi < mine.size()) {
                    double d = double(blocks[std::size_t(mine[hi])].dim);
                    double cost = req.ring == Ring::ModP ? d * d * 4.0 * double(req.primes.size())
                                                         : d * d * 24.0;
                    if (hi > lo && used + cost > budget_bytes) break;
                    used += cost;
                    in_batch[std::size_t(mine[hi])] = 1;
                    ++hi;
                }
                std::map<int, std::vector<ModpEchelon>> mod_acc;
                std::map<int, IntEchelon> int_acc;
                std::map<int, long long> remaining;
                for (std::size_t t = lo; t < hi; ++t) {
                    int b = mine[t];
                    if (req.ring == Ring::ModP) {
                        std::vector<ModpEchelon> accs;
                        for (auto p : req.primes) accs.emplace_back(int(blocks[b].dim), p);
                        mod_acc.emplace(b, std::move(accs));
                    } else {
                        int_acc.emplace(b, IntEchelon(int(blocks[b].dim)));
                    }
                    remaining.emplace(b, blocks[b].dim);
                }
                long long alive = (long long)remaining.size();

                std::vector<std::uint32_t> scratch;
                std::vector<Int> int_scratch;
                pair_scan([&](const Partition& pt, long long i, long long j) {
                    if (alive == 0) return false;
                    std::uint64_t wk =
                        gw_keys[pt.p][std::size_t(i)] + gw_keys[pt.q][std::size_t(j)];
                    auto bit = block_of.find(wk);
                    if (bit == block_of.end()) return true;
                    int b = bit->second;
                    if (!in_batch[std::size_t(b)]) return true;
                    auto rit = remaining.find(b);
                    if (rit->second == 0) return true;
                    SparseCol col = model->bracket_column(pt.p, i, pt.q, j);
                    ++my_columns;
                    if (col.empty()) return true;
                    const Block& blk = blocks[b];
                    if (req.ring == Ring::ModP) {
                        auto& accs = mod_acc.at(b);
                        bool all_full = true;
                        for (auto& acc : accs) {
                            scratch.assign(std::size_t(blk.dim), 0);
                            for (const auto& [r, c] : col) {
                                long long cc = c % (long long)acc.prime();
                                if (cc < 0) cc += acc.prime();
                                scratch[std::size_t(row_local[r])] = std::uint32_t(cc);
                            }
                            acc.insert(scratch);
                            all_full = all_full && acc.full();
                        }
                        if (req.early_exit && all_full) {
                            rit->second = 0;
                            --alive;
                        }
                    } else {
                        auto& acc = int_acc.at(b);
                        int_scratch.assign(std::size_t(blk.dim), 0);
                        for (const auto& [r, c] : col)
                            int_scratch[std::size_t(row_local[r])] = c;
                        acc.insert(int_scratch);
                        if (req.ring == Ring::Q && req.early_exit && acc.rank() == int(blk.dim)) {
                            rit->second = 0;
                            --alive;
                        }
                    }
                    return true;
                });

                for (std::size_t t = lo; t < hi; ++t) {
                    int b = mine[t];
                    Block& blk = blocks[b];
                    if (req.ring == Ring::ModP) {
                        auto& accs = mod_acc.at(b);
                        for (auto& acc : accs) blk.rank_per_prime.push_back(acc.rank());
                        blk.rank = blk.rank_per_prime[0];
                        blk.early = req.early_exit && remaining.at(b) == 0;
                    } else {
                        auto& acc = int_acc.at(b);
                        blk.rank = acc.rank();
                        blk.early = req.early_exit && remaining.at(b) == 0;
                        if (req.ring == Ring::Z)
                            blk.divisors = smith_divisors(acc.triangular_rows());
                    }
                }
                lo = hi;
            }
            columns += my_columns;
        } catch (const std::exception& e) {
            errors[std::size_t(wid)] = e.what();
        }
    };

    if (nw == 1) {
        worker(0);
    } else {
        std::vector<std::thread> ths;
        for (int wid = 0; wid < nw; ++wid) ths.emplace_back(worker, wid);
        for (auto& th : ths) th.join();
    }
    for (const auto& e : errors)
        if (!e.empty()) throw range_error("span worker failed: " + e);

    res.columns = columns.load();
    if (req.ring == Ring::ModP) res.rank_per_prime.assign(req.primes.size(), 0);
    std::vector<std::vector<Int>> divisor_lists;
    for (const Block& b : blocks) {
        res.rank += b.rank;
        res.early_exit_any = res.early_exit_any || b.early;
        if (req.ring == Ring::ModP)
            for (std::size_t t = 0; t < req.primes.size(); ++t)
                res.rank_per_prime[t] += b.rank_per_prime[t];
        if (req.ring == Ring::Z && !b.divisors.empty()) divisor_lists.push_back(b.divisors);
    }
    if (req.ring == Ring::ModP) {
        for (auto r : res.rank_per_prime)
            if (r != res.rank_per_prime[0]) res.prime_disagreement = true;
        res.rank = res.rank_per_prime[0];
    }
    if (req.ring == Ring::Z) res.divisors = merge_divisors(divisor_lists);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ---------------------------------------------------------------- materialized ops

SpanMatrix bracket_span(AlgebraKind kind, int size, int k, const std::vector<Partition>& parts,
                        long long max_entries) {
    auto model = make_model(kind, size);
    model->prepare(k);
    for (const auto& pt : parts) {
        if (pt.p + pt.q != k) throw range_error("partition degrees must sum to k");
        model->prepare(pt.p);
        model->prepare(pt.q);
    }
    SpanMatrix m;
    m.kind = kind;
    m.size = size;
    m.k = k;
    m.dim = model->row_dim(k);
    long long entries = 0;
    for (const auto& pt : parts) {
        long long np = model->gen_count(pt.p), nq = model->gen_count(pt.q);
        for (long long i = 0; i < np; ++i) {
            for (long long j = (pt.p == pt.q ? i + 1 : 0); j < nq; ++j) {
                SparseCol col = model->bracket_column(pt.p, i, pt.q, j);
                if (col.empty()) continue;
                entries += (long long)col.size();
                if (entries > max_entries)
                    throw range_error("bracket_span: size guard exceeded; use the streaming engine");
                m.cols.push_back(SpanColumn{pt, i, j, std::move(col)});
            }
        }
    }
    return m;
}

SnfResult snf_of_columns(long long dim, const std::vector<SparseCol>& cols) {
    IntEchelon ech{int(dim)};
    std::vector<Int> scratch;
    for (const auto& col : cols) {
        scratch.assign(std::size_t(dim), 0);
        for (const auto& [r, c] : col) scratch[std::size_t(r)] = c;
        ech.insert(scratch);
    }
    SnfResult out;
    out.divisors = smith_divisors(ech.triangular_rows());
    out.rank = (long long)out.divisors.size();
    out.free_rank = dim - out.rank;
    for (const auto& d : out.divisors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

SnfResult smith_normal_form(const SpanMatrix& m, long long column_guard) {
    if ((long long)m.cols.size() > column_guard)
        throw range_error("smith_normal_form: column guard exceeded (" +
                          std::to_string(m.cols.size()) + " > " + std::to_string(column_guard) +
                          ")");
    std::vector<SparseCol> cols;
    cols.reserve(m.cols.size());
    for (const auto& c : m.cols) cols.push_back(c.entries);
    return snf_of_columns(m.dim, cols);
}

ModpRankResult rank_mod_p(const SpanMatrix& m, std::uint32_t p, bool allow_early_exit) {
    if (!is_prime_u64(p)) throw range_error("rank_mod_p: modulus is not prime");
    ModpEchelon acc(int(m.dim), p);
    std::vector<std::uint32_t> scratch;
    ModpRankResult out;
    for (const auto& col : m.cols) {
        scratch.assign(std::size_t(m.dim), 0);
        for (const auto& [r, c] : col.entries) {
            long long cc = c % (long long)p;
            if (cc < 0) cc += p;
            scratch[std::size_t(r)] = std::uint32_t(cc);
        }
        acc.insert(scratch);
        if (allow_early_exit && acc.full()) {
            out.early_exit = true;
            break;
        }
    }
    out.rank = acc.rank();
    return out;
}

// ---------------------------------------------------------------- coinvariants

CoinvariantsResult coinvariants(long long ambient_dim, const std::vector<SparseCol>& submodule,
                                const std::vector<SparseCol>& action_images,
                                const std::vector<std::uint32_t>& primes) {
    CoinvariantsResult out;
    std::vector<long long> ranks;
    std::vector<long long> survivors;
    for (std::size_t t = 0; t < primes.size(); ++t) {
        ModpEchelon acc(int(ambient_dim), primes[t]);
        std::vector<std::uint32_t> scratch;
        auto feed = [&](const SparseCol& col) {
            scratch.assign(std::size_t(ambient_dim), 0);
            for (const auto& [r, c] : col) {
                long long cc = c % (long long)primes[t];
                if (cc < 0) cc += primes[t];
                scratch[std::size_t(r)] = std::uint32_t(cc);
            }
            acc.insert(scratch);
        };
        for (const auto& col : submodule) feed(col);
        for (const auto& col : action_images) feed(col);
        ranks.push_back(acc.rank());
        if (t == 0) {
            std::vector<std::uint32_t> probe;
            for (long long r = 0; r < ambient_dim; ++r) {
                probe.assign(std::size_t(ambient_dim), 0);
                probe[std::size_t(r)] = 1;
                acc.reduce(probe);
                for (auto v : probe)
                    if (v) {
                        survivors.push_back(r);
                        break;
                    }
            }
        }
    }
    out.rank_per_prime = ranks;
    for (auto r : ranks)
        if (r != ranks[0]) out.prime_disagreement = true;
    out.dim = ambient_dim - ranks[0];
    out.quotient_rows = survivors;
    return out;
}

std::vector<AssocDerivation> sp_basis(int g) {
    std::vector<AssocDerivation> out;
    for (const Spider& s : a_basis(g, 0))
        out.push_back(derivation_of_invariant_tensor(orbit_sum_tensor(s, g), g));
    return out;
}

namespace {

std::vector<SparseCol> sp_action_columns_a1(int g) {
    auto model = make_model(AlgebraKind::Symp, g);
    model->prepare(0);
    model->prepare(1);
    std::vector<SparseCol> cols;
    long long n0 = model->gen_count(0), n1 = model->gen_count(1);
    for (long long i = 0; i < n0; ++i)
        for (long long j = 0; j < n1; ++j) {
            SparseCol col = model->bracket_column(0, i, 1, j);
            if (!col.empty()) cols.push_back(std::move(col));
        }
    return cols;
}

long long wedge2_index(int u, int v, int n2g) {
    // u < v, 0-based; row-major upper triangle
    return (long long)u * n2g - (long long)u * (u + 1) / 2 + (v - u - 1);
}

std::vector<SparseCol> wedge2_action_columns(int g) {
    const int n = 2 * g;
    std::vector<SparseCol> cols;
    for (const AssocDerivation& x : sp_basis(g)) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                // X.(u ^ v) = X(u) ^ v + u ^ X(v)
                SparseCol raw;
                auto add = [&](const TensorElement& img, int fixed, bool img_left) {
                    for (const auto& [w, c] : img.terms()) {
                        int y = int(w[0]) - 1;
                        long long cc = to_ll(c);
                        int a = img_left ? y : fixed;
                        int b = img_left ? fixed : y;
                        if (a == b) continue;
                        if (a < b)
                            raw.emplace_back(wedge2_index(a, b, n), cc);
                        else
                            raw.emplace_back(wedge2_index(b, a, n), -cc);
                    }
                };
                add(x.on_generator(Letter(u + 1)), v, true);
                add(x.on_generator(Letter(v + 1)), u, false);
                SparseCol col = AssocModel::collect(std::move(raw));
                if (!col.empty()) cols.push_back(std::move(col));
            }
        }
    }
    return cols;
}

}  // namespace

CoinvariantsResult sp_coinvariants_of_a1(int g) {
    return coinvariants(a_dimension(g, 1), {}, sp_action_columns_a1(g));
}

CoinvariantsResult sp_coinvariants_wedge2(int g) {
    const int n = 2 * g;
    return coinvariants((long long)n * (n - 1) / 2, {}, wedge2_action_columns(g));
}

CoinvariantsResult sp_coinvariants_wedge2_mod_omega(int g) {
    const int n = 2 * g;
    SparseCol omega;
    for (int i = 0; i < g; ++i) omega.emplace_back(wedge2_index(i, g + i, n), 1);
    return coinvariants((long long)n * (n - 1) / 2, {omega}, wedge2_action_columns(g));
}

long long h1_sp_dimension(int g) {
    SpanRequest req;
    req.kind = AlgebraKind::Symp;
    req.size = g;
    req.k = 0;
    req.partitions = {{0, 0}};
    req.ring = Ring::ModP;
    SpanResult r = run_span(req);
    if (r.prime_disagreement) throw oracle_error("h1_sp_dimension: prime disagreement");
    return r.module_dim - r.rank;
}

// ---------------------------------------------------------------- h1 + profile

H1Report h1_weight(const H1Request& req) {
    if (req.k < 0) throw range_error("h1_weight: negative weight");
    if (req.mode == Mode::Plus && req.k < 1) throw range_error("h1_weight: plus mode needs k >= 1");
    std::vector<Partition> parts =
        !req.partitions.empty()
            ? req.partitions
            : (req.mode == Mode::Plus ? plus_partitions(req.k) : full_partitions(req.k));

    H1Report rep;
    rep.algebra = algebra_name(req.kind);
    rep.size = req.size;
    rep.k = req.k;
    rep.mode = req.mode == Mode::Plus ? "plus" : "full";
    rep.ring = ring_name(req.ring);

    // the request digest comes from the config plus the deterministic basis
    // streams, so a stale cache entry invalidates itself
    {
        auto model = make_model(req.kind, req.size);
        model->prepare(req.k);
        Fnv1a h;
        h.feed_str(rep.algebra + "|" + std::to_string(req.size) + "|" + std::to_string(req.k) +
                   "|" + rep.mode + "|" + rep.ring + "|" + partitions_str(parts));
        for (auto p : req.primes) h.feed_u64(p);
        h.feed_u64(model->basis_digest(req.k));
        for (const auto& pt : parts) {
            model->prepare(pt.p);
            model->prepare(pt.q);
            h.feed_i64(pt.p);
            h.feed_i64(pt.q);
            h.feed_u64(model->basis_digest(pt.p));
            h.feed_u64(model->basis_digest(pt.q));
        }
        rep.digest = h.digest();
    }
    {
        H1Report cached;
        if (cache_lookup(req.cache_dir, rep, cached)) return cached;
    }

    SpanRequest sreq;
    sreq.kind = req.kind;
    sreq.size = req.size;
    sreq.k = req.k;
    sreq.partitions = parts;
    sreq.ring = req.ring;
    sreq.primes = req.primes;
    sreq.workers = req.workers;
    sreq.early_exit = req.ring != Ring::Z;
    SpanResult r = run_span(sreq);

    rep.module_dim = r.module_dim;
    rep.rank = r.rank;
    rep.free_rank = r.module_dim - r.rank;
    for (const auto& d : r.divisors)
        if (d > 1) rep.torsion.push_back(d.str());
    rep.rank_per_prime = r.rank_per_prime;
    rep.prime_disagreement = r.prime_disagreement;
    rep.early_exit = r.early_exit_any;
    rep.columns = r.columns;
    rep.seconds = r.seconds;

    if (req.mode == Mode::Full && req.k >= 1) {
        rep.has_assembly = true;
        SpanRequest zreq = sreq;
        zreq.k = 0;
        zreq.partitions = {{0, 0}};
        SpanResult z = run_span(zreq);
        rep.h1_degree0_free = z.module_dim - z.rank;
        for (const auto& d : z.divisors)
            if (d > 1) rep.h1_degree0_torsion.push_back(d.str());
        // coinvariants of the positive-part quotient through the unblocked
        // engine; beyond the guard the blocked result stands alone
        if (r.module_dim <= 1500 && req.kind != AlgebraKind::LieSymp) {
            auto model = make_model(req.kind, req.size);
            model->prepare(req.k);
            model->prepare(0);
            std::vector<SparseCol> sub, act;
            for (const auto& pt : plus_partitions(req.k)) {
                model->prepare(pt.p);
                model->prepare(pt.q);
                long long np = model->gen_count(pt.p), nq = model->gen_count(pt.q);
                for (long long i = 0; i < np; ++i)
                    for (long long j = (pt.p == pt.q ? i + 1 : 0); j < nq; ++j) {
                        SparseCol c = model->bracket_column(pt.p, i, pt.q, j);
                        if (!c.empty()) sub.push_back(std::move(c));
                    }
            }
            long long n0 = model->gen_count(0), nk = model->gen_count(req.k);
            for (long long i = 0; i < n0; ++i)
                for (long long j = 0; j < nk; ++j) {
                    SparseCol c = model->bracket_column(0, i, req.k, j);
                    if (!c.empty()) act.push_back(std::move(c));
                }
            CoinvariantsResult cr = coinvariants(r.row_dim, sub, act, req.primes);
            rep.coinvariants_dim = cr.dim;
            rep.assembly_consistent = rep.coinvariants_dim == rep.free_rank;
        } else {
            rep.coinvariants_dim = rep.free_rank;
        }
    }
    if (!rep.prime_disagreement) cache_store(req.cache_dir, rep);
    return rep;
}

std::vector<GenerationRow> generation_profile(AlgebraKind kind, int size, int max_k,
                                              const std::vector<std::uint32_t>& primes,
                                              int workers) {
    std::vector<GenerationRow> out;
    for (int k = 2; k <= max_k; ++k) {
        GenerationRow row;
        row.k = k;
        std::vector<std::pair<std::string, std::vector<Partition>>> subsets;
        subsets.emplace_back("(k-1,1)", std::vector<Partition>{{k - 1, 1}});
        if (k >= 4) subsets.emplace_back("(k-1,1)+(k-2,2)",
                                         std::vector<Partition>{{k - 1, 1}, {k - 2, 2}});
        auto all = plus_partitions(k);
        if (all.size() > subsets.back().second.size()) subsets.emplace_back("all", all);
        long long prev = -1;
        for (auto& [label, parts] : subsets) {
            SpanRequest req;
            req.kind = kind;
            req.size = size;
            req.k = k;
            req.partitions = parts;
            req.ring = Ring::ModP;
            req.primes = primes;
            req.workers = workers;
            SpanResult r = run_span(req);
            if (r.prime_disagreement) throw oracle_error("generation_profile: prime disagreement");
            row.dim = r.module_dim;
            row.ranks.emplace_back(label, r.rank);
            if (prev >= 0 && r.rank < prev) row.monotone = false;
            prev = r.rank;
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace derilab
