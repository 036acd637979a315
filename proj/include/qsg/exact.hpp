#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qsg/graph.hpp"

// Matrix-free exact diagonalization of
//   H = -sum_<ij> J_ij s^z_i s^z_j - Gamma sum_i s^x_i - h sum_i s^z_i
// for N <= ~20: Lanczos ground state, reduced density matrices, Renyi
// entropies, quantum Fisher information and z-basis observables.
// Basis convention: bit b of the index is spin b, bit value 0 -> s^z=+1.

namespace qsg {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RegionOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPhysicalSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HamiltonianSpec {
    const DisorderInstance* instance = nullptr;
    double gamma = 0.0;
    double h = 0.0;
    std::vector<double> local_fields;  // optional per-site z fields, empty = none

    int n_spins() const { return instance->graph.n; }
};

struct GroundState {
    int n = 0;
    std::vector<double> amplitudes;  // length 2^n, z basis, real
    double energy = 0.0;
    double residual_norm = 0.0;
    bool degenerate = false;  // two lowest Ritz values closer than 10*tol
};

struct ReducedDensityMatrix {
    int dim = 0;                  // 2^{|A|}
    std::vector<double> entries;  // dim*dim, row major, symmetric
    Region region;

    double at(int a, int b) const { return entries[static_cast<std::size_t>(a) * dim + b]; }
};

// Matrix-free H with the diagonal cached; shared by apply/Lanczos.
class HamiltonianOperator {
public:
    explicit HamiltonianOperator(const HamiltonianSpec& spec);
    void apply(const double* v, double* out) const;
    std::size_t dim() const { return diag_.size(); }
    int n_spins() const { return n_; }

private:
    int n_;
    double gamma_;
    std::vector<double> diag_;
};

std::vector<double> apply_hamiltonian(const HamiltonianSpec& spec, const std::vector<double>& v);

struct LanczosOptions {
    double tol = 1e-10;
    int max_iter = 2000;        // total operator applications
    int max_krylov = 120;       // per restart cycle, full reorthogonalization
    uint64_t start_seed = 0x9d2c5680u;
};

GroundState lanczos_ground_state(const HamiltonianSpec& spec, const LanczosOptions& opts = {});

ReducedDensityMatrix reduced_density_matrix(const GroundState& psi, const Region& region);

// S_alpha = log Tr(rho^alpha) / (1-alpha); alpha=1 gives von Neumann.
// Eigenvalues below 1e-14 are clipped out of the sum.
double renyi_entropy(const ReducedDensityMatrix& rho, double alpha);

struct QfiResult {
    double fx = 0, fy = 0, fz = 0;
    double fbar() const { return (fx + fy + fz) / 3.0; }
};

// F_a = 4 Var(J_a), J_a = (1/2) sum_i s^a_i, exact on the real state.
QfiResult quantum_fisher_information(const GroundState& psi);

// F_bar above this value certifies (k+1)-partite entanglement.
double k_entanglement_bound(int n, int k);

struct EdObservables {
    std::vector<double> magnetization;  // <s^z_i>
    std::vector<double> zz;             // <s^z_i s^z_j>, n*n row major
    double q_ea = 0.0;
    double connected(int i, int j) const;
    double sum_connected_offdiag() const;  // 2 sum_{i<j} C_ij
};

EdObservables ed_observables(const GroundState& psi);

// Little-endian dump: u32 magic, u32 n, f64 energy, then 2^n f64 amplitudes.
void write_ground_state(const GroundState& psi, const std::string& path);
GroundState read_ground_state(const std::string& path);

}  // namespace qsg
