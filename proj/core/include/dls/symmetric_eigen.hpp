#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dls {

/// Dense real symmetric matrix stored row-major.
///
/// Construction validates symmetry (exact equality of mirrored entries) and finiteness,
/// so every SymmetricMatrix value is a valid eigensolver input.
class SymmetricMatrix
{
public:
	SymmetricMatrix() = default;

	/// Zero matrix of dimension n.
	explicit SymmetricMatrix(int n);

	/// Takes ownership of n*n row-major entries. Throws InvalidParams when the
	/// size is wrong, an entry is not finite, or entries[i][j] != entries[j][i].
	SymmetricMatrix(int n, std::vector<double> entries);

	static SymmetricMatrix diagonal(std::span<const double> d);

	int dim() const noexcept { return n_; }
	double operator()(int i, int j) const noexcept { return a_[static_cast<std::size_t>(i) * n_ + j]; }

	/// Sets both (i,j) and (j,i).
	void set(int i, int j, double value);

	double trace() const noexcept;
	double frobenius_squared() const noexcept;

	/// Gershgorin radius of row i: sum of |m_ij| over j != i.
	double row_radius(int i) const noexcept;

	std::span<const double> entries() const noexcept { return a_; }

	friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
	int n_ = 0;
	std::vector<double> a_;
};

inline constexpr double kDefaultClusterTol = 1e-6;

/// Eigenvalues sorted non-increasing, plus the clustering tolerance they are meant to be read with.
struct Spectrum
{
	std::vector<double> values;
	double tol = kDefaultClusterTol;

	int size() const noexcept { return static_cast<int>(values.size()); }
	double largest() const { return values.front(); }
	double smallest() const { return values.back(); }
	double sum() const noexcept;
	double sum_of_squares() const noexcept;
};

struct EigenCluster
{
	double value;
	int multiplicity;

	friend bool operator==(const EigenCluster&, const EigenCluster&) = default;
};

/// All eigenvalues of a symmetric matrix.
///
/// Householder reduction to tridiagonal form, then QL iteration with implicit
/// Wilkinson-type shifts on the tridiagonal. Deterministic for identical input.
/// Throws IterationLimit when more than 30*n QL sweeps are needed in total.
Spectrum symmetric_eigenvalues(const SymmetricMatrix& m, double cluster_tol = kDefaultClusterTol);

/// Greedy left-to-right clustering of a non-increasing spectrum: a value joins the
/// current cluster when it lies within tol of that cluster's running mean.
/// Requires tol > 0 (InvalidParams otherwise).
std::vector<EigenCluster> cluster_multiplicities(const Spectrum& s, double tol);

inline std::vector<EigenCluster> cluster_multiplicities(const Spectrum& s)
{
	return cluster_multiplicities(s, s.tol);
}

} // namespace dls
