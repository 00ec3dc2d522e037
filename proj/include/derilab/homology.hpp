#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derilab/deriv.hpp"
#include "derilab/linalg.hpp"
#include "derilab/symp.hpp"

namespace derilab {

enum class AlgebraKind { Assoc, Lie, Symp, LieSymp };
AlgebraKind parse_algebra(const std::string& s);
std::string algebra_name(AlgebraKind k);

enum class Ring { Z, Q, ModP };
Ring parse_ring(const std::string& s);
std::string ring_name(Ring r);

enum class Mode { Plus, Full };

// Three fixed 30-bit primes for modular shadows.
extern const std::vector<std::uint32_t> kDefaultPrimes;

using WeightVec = std::vector<std::int16_t>;
using SparseCol = std::vector<std::pair<long long, long long>>;

// Degree-graded pieces with their torus weights and bracket columns. Row
// coordinates realize the degree-k value space; for the kernel-presented
// algebra (symplectic derivations of the free Lie algebra) the module sits
// inside a larger ambient row space.
class GradedModel {
  public:
    virtual ~GradedModel() = default;
    virtual int size() const = 0;
    virtual long long row_dim(int k) = 0;
    virtual long long module_dim(int k) = 0;
    virtual long long gen_count(int k) = 0;
    virtual WeightVec row_weight(int k, long long row) = 0;
    virtual WeightVec gen_weight(int k, long long i) = 0;
    virtual SparseCol bracket_column(int p, long long i, int q, long long j) = 0;
    virtual std::uint64_t basis_digest(int k) = 0;
    // Materializes per-degree caches; call before any concurrent use.
    virtual void prepare(int k) = 0;
};

std::unique_ptr<GradedModel> make_model(AlgebraKind kind, int size);

struct Partition {
    int p = 0, q = 0;  // normalized p >= q
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.p == b.p && a.q == b.q;
    }
};

std::vector<Partition> plus_partitions(int k);
std::vector<Partition> full_partitions(int k);
std::vector<Partition> parse_partitions(const std::string& text);  // "2,1;1,1"
std::string partitions_str(const std::vector<Partition>& parts);

struct SpanRequest {
    AlgebraKind kind = AlgebraKind::Assoc;
    int size = 2;
    int k = 1;
    std::vector<Partition> partitions;
    Ring ring = Ring::Z;
    std::vector<std::uint32_t> primes = kDefaultPrimes;
    int workers = 1;
    bool early_exit = true;
};

struct BlockStat {
    WeightVec weight;
    long long dim = 0;
    long long rank = 0;
    bool early_exit = false;
};

struct SpanResult {
    long long module_dim = 0;
    long long row_dim = 0;
    long long rank = 0;
    std::vector<long long> rank_per_prime;
    bool prime_disagreement = false;
    bool early_exit_any = false;
    std::vector<Int> divisors;  // ring Z only
    long long columns = 0;
    std::uint64_t basis_digest = 0;
    double seconds = 0;
    long long block_count = 0;
};

// Streaming weight-blocked elimination over the requested ring.
SpanResult run_span(const SpanRequest& req);

// Materialized span matrix with column provenance, for desk-size work.
struct SpanColumn {
    Partition part;
    long long i = 0, j = 0;
    SparseCol entries;
};

struct SpanMatrix {
    AlgebraKind kind = AlgebraKind::Assoc;
    int size = 0, k = 0;
    long long dim = 0;
    std::vector<SpanColumn> cols;
};

SpanMatrix bracket_span(AlgebraKind kind, int size, int k, const std::vector<Partition>& parts,
                        long long max_entries = 50000000);

struct SnfResult {
    long long rank = 0;
    std::vector<Int> divisors;  // nonzero elementary divisors d1 | d2 | ...
    long long free_rank = 0;    // of the cokernel
    std::vector<Int> torsion;   // divisors > 1
};

SnfResult smith_normal_form(const SpanMatrix& m, long long column_guard = 5000);
SnfResult snf_of_columns(long long dim, const std::vector<SparseCol>& cols);

struct ModpRankResult {
    long long rank = 0;
    bool early_exit = false;
};

ModpRankResult rank_mod_p(const SpanMatrix& m, std::uint32_t p, bool allow_early_exit = true);

struct H1Request {
    AlgebraKind kind = AlgebraKind::Assoc;
    int size = 2;
    int k = 0;
    Mode mode = Mode::Plus;
    Ring ring = Ring::Z;
    std::vector<std::uint32_t> primes = kDefaultPrimes;
    std::vector<Partition> partitions;  // optional override
    int workers = 1;
    std::string cache_dir;  // empty = no cache
};

struct H1Report {
    std::string algebra;
    int size = 0;
    int k = 0;
    std::string mode;
    std::string ring;
    long long module_dim = 0;
    long long rank = 0;
    long long free_rank = 0;       // Q-dimension when ring != Z
    std::vector<std::string> torsion;
    std::vector<long long> rank_per_prime;
    bool prime_disagreement = false;
    bool early_exit = false;
    long long columns = 0;
    double seconds = 0;
    std::uint64_t digest = 0;
    bool from_cache = false;
    std::string evidence = "finite-instance evidence; in-range computation, no stable extrapolation";
    // full-mode assembly
    bool has_assembly = false;
    long long h1_degree0_free = 0;
    std::vector<std::string> h1_degree0_torsion;
    long long coinvariants_dim = 0;
    bool assembly_consistent = true;
};

H1Report h1_weight(const H1Request& req);

struct CoinvariantsResult {
    long long dim = 0;
    std::vector<long long> quotient_rows;  // representative coordinates
    std::vector<long long> rank_per_prime;
    bool prime_disagreement = false;
};

// Quotient of Z^ambient by (submodule + action images), dimension over Q via
// modular shadows; full modular rank certifies exact vanishing.
CoinvariantsResult coinvariants(long long ambient_dim, const std::vector<SparseCol>& submodule,
                                const std::vector<SparseCol>& action_images,
                                const std::vector<std::uint32_t>& primes = kDefaultPrimes);

// Degree-0 symplectic derivations (an integral basis of sp).
std::vector<AssocDerivation> sp_basis(int g);

CoinvariantsResult sp_coinvariants_of_a1(int g);
// Second exterior power with the omega0 line divided out.
CoinvariantsResult sp_coinvariants_wedge2_mod_omega(int g);
CoinvariantsResult sp_coinvariants_wedge2(int g);
long long h1_sp_dimension(int g);

struct GenerationRow {
    int k = 0;
    long long dim = 0;
    std::vector<std::pair<std::string, long long>> ranks;  // subset label -> rank
    bool monotone = true;
};

std::vector<GenerationRow> generation_profile(AlgebraKind kind, int size, int max_k,
                                              const std::vector<std::uint32_t>& primes,
                                              int workers);

}  // namespace derilab
