#pragma once

#include "dls/graph.hpp"
#include "dls/symmetric_eigen.hpp"

#include <cstdint>
#include <optional>

namespace dls {

/// Tolerances shared by the analysis and the theorem registry.
struct Tolerances
{
	/// Identity checks (trace, R1, positivity, interlacing) and spectral comparisons.
	double eig = 1e-8;
	/// Equality detection on bound slack and eigenvalue-n detection.
	double eq = 1e-6;
	/// Multiplicity clustering.
	double cluster = 1e-6;
};

/// D^L = Diag(Tr) - D. Every row sums to zero exactly.
SymmetricMatrix distance_laplacian(const DistanceSummary& s);

/// Throws DisconnectedGraph when g is not connected.
SymmetricMatrix distance_laplacian(const Graph& g);

/// Distance Laplacian report for one connected graph on n >= 2 vertices.
struct DlapAnalysis
{
	int n = 0;
	Spectrum spectrum; // non-increasing; spectrum.values[n-1] is the zero eigenvalue
	double partial_1 = 0.0;
	double partial_n_minus_1 = 0.0;
	/// Spread: largest minus second-smallest eigenvalue.
	double dls = 0.0;
	/// Set when dls is within the equality tolerance of an integer.
	std::optional<std::int64_t> dls_integer;
	/// How many eigenvalues lie within the equality tolerance of n.
	int mult_of_n = 0;
	DistanceSummary summary;
	/// |sum of eigenvalues - 2W| / max(1, 2W).
	double trace_identity_err = 0.0;
	/// |sum of squared eigenvalues - R1| / max(1, R1).
	double sq_identity_err = 0.0;
};

/// Builds D^L, computes its spectrum and verifies the analysis invariants:
/// zero smallest eigenvalue, trace and R1 identities, Tr_max + 1 <= spectral
/// radius <= 2 Tr_max. Any violation beyond tol.eig throws
/// InternalIdentityFailure. Throws DisconnectedGraph for disconnected input and
/// InvalidParams for n < 2.
DlapAnalysis analyze(const Graph& g, const Tolerances& tol = {});

/// Larger eigenvalue of the principal 2x2 block [[tr_u, -d], [-d, tr_v]] of D^L.
/// By Cauchy interlacing it never exceeds the spectral radius of D^L.
double two_by_two_interlacing_bound(std::int64_t tr_u, std::int64_t tr_v, std::int64_t d_uv);

/// Outcome of checking every 2x2 principal block of D^L against the spectral radius.
struct InterlacingAudit
{
	int pairs_checked = 0;
	/// Minimum over pairs of (spectral radius - block root); >= -tol when the audit passes.
	double worst_slack = 0.0;
	int worst_u = -1;
	int worst_v = -1;
	bool pairs_ok = true;

	/// Spectral radius >= (2n + d^2 - 2d + 1)/2 for diameter d.
	double diameter_path_bound = 0.0;
	bool diameter_path_ok = true;

	/// Spectral radius >= n + alpha; only meaningful on diameter-2 graphs.
	bool independence_applicable = false;
	double independence_bound = 0.0;
	bool independence_ok = true;

	bool passed() const noexcept { return pairs_ok && diameter_path_ok && independence_ok; }
};

/// Runs the pairwise interlacing audit. alpha is required for the diameter-2
/// independence bound and computed when not supplied.
InterlacingAudit interlacing_audit(const Graph& g, const DlapAnalysis& a, const Tolerances& tol = {},
								   std::optional<int> alpha = std::nullopt);

} // namespace dls
