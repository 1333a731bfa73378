#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace compser::harmonics {

enum class Provenance { internal_exact, internal_float, external_file };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& s);

// Dense table of branching coefficients C(m, l, i) over the rectangle
// m <= mmax, l <= lmax, row-major over (m, l). Slots with l > m are zero.
// Immutable after construction in normal use; set() exists for builders
// and ingestion.
class BranchTable {
public:
    BranchTable() = default;
    BranchTable(int n, int i, int mmax, int lmax, Provenance prov);

    int n() const { return n_; }
    int i() const { return i_; }
    int mmax() const { return mmax_; }
    int lmax() const { return lmax_; }
    Provenance provenance() const { return prov_; }
    const std::vector<double>& entries() const { return entries_; }

    double at(int m, int l) const;  // throws DomainError out of range
    void set(int m, int l, double v);

    // Entrywise positive rescaling (used by normalization-independence checks).
    BranchTable scaled(double c) const;

private:
    int n_ = 0, i_ = 0, mmax_ = -1, lmax_ = -1;
    Provenance prov_ = Provenance::internal_float;
    std::vector<double> entries_;
};

// CSV schema:
//   # branch-table n=<n> i=<i> mmax=<mmax> lmax=<lmax> provenance=<name>
//   [optional further '#' comment lines, e.g. a config echo]
//   m,l,value          (value: scientific, 17 significant digits)
// External ramified tables use the identical schema with i >= 1.
void write_branch_table_csv(std::ostream& os, const BranchTable& t,
                            const std::string& config_echo = "");
BranchTable read_branch_table_csv(std::istream& is);

// JSON alternative carrying the same fields.
std::string branch_table_to_json(const BranchTable& t, const std::string& config_echo = "");
BranchTable branch_table_from_json(const std::string& text);

// Options governing table construction.
struct BuildOptions {
    int exact_mode_mmax_cap = 60;     // resource cap for the exact path
    std::int64_t cell_cap = 100000000;  // total table cells
    int threads = 1;
};

enum class TableMode { exact, fast };

// Dense table with every slot computed by branch_coeff_exact (exact mode,
// converted to double) or branch_coeff_fast. Slot computations are pure and
// independent; parallel builds are bit-identical to serial ones.
BranchTable build_branch_table(int n, int mmax, int lmax, TableMode mode,
                               const BuildOptions& opts = {});

} // namespace compser::harmonics
