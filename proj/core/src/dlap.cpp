#include "dls/dlap.hpp"

#include "dls/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dls {

SymmetricMatrix distance_laplacian(const DistanceSummary& s)
{
	const int n = s.n;
	SymmetricMatrix m(n);
	for (int i = 0; i < n; ++i) {
		m.set(i, i, static_cast<double>(s.tr[i]));
		for (int j = i + 1; j < n; ++j)
			m.set(i, j, -static_cast<double>(s.distance(i, j)));
	}
	return m;
}

SymmetricMatrix distance_laplacian(const Graph& g)
{
	return distance_laplacian(apsp_distance_summary(g));
}

namespace {

double relative_error(double value, double exact)
{
	return std::abs(value - exact) / std::max(1.0, std::abs(exact));
}

[[noreturn]] void identity_failure(const std::string& what, double lhs, double rhs)
{
	std::ostringstream os;
	os.precision(17);
	os << what << ": " << lhs << " vs " << rhs;
	throw InternalIdentityFailure(os.str());
}

} // namespace

DlapAnalysis analyze(const Graph& g, const Tolerances& tol)
{
	if (g.order() < 2)
		throw InvalidParams("distance Laplacian spread needs at least 2 vertices");

	DlapAnalysis a;
	a.summary = apsp_distance_summary(g);
	a.n = g.order();
	a.spectrum = symmetric_eigenvalues(distance_laplacian(a.summary), tol.cluster);

	const auto& ev = a.spectrum.values;
	const int n = a.n;
	a.partial_1 = ev.front();
	a.partial_n_minus_1 = ev[n - 2];
	a.dls = a.partial_1 - a.partial_n_minus_1;

	const double rounded = std::round(a.dls);
	if (std::abs(a.dls - rounded) <= tol.eq)
		a.dls_integer = static_cast<std::int64_t>(rounded);

	a.mult_of_n = static_cast<int>(
		std::count_if(ev.begin(), ev.end(), [&](double x) { return std::abs(x - n) <= tol.eq; }));

	const double two_w = 2.0 * static_cast<double>(a.summary.wiener);
	const double r1 = static_cast<double>(a.summary.r1);
	a.trace_identity_err = relative_error(a.spectrum.sum(), two_w);
	a.sq_identity_err = relative_error(a.spectrum.sum_of_squares(), r1);

	const double scale = std::max(1.0, a.partial_1);
	if (std::abs(ev.back()) > tol.eig * scale)
		identity_failure("smallest eigenvalue is not zero", ev.back(), 0.0);
	if (a.dls < -tol.eig * scale)
		identity_failure("negative spread", a.dls, 0.0);
	if (a.trace_identity_err > tol.eig)
		identity_failure("eigenvalue sum differs from 2W", a.spectrum.sum(), two_w);
	if (a.sq_identity_err > tol.eig)
		identity_failure("squared eigenvalue sum differs from R1", a.spectrum.sum_of_squares(), r1);
	const double tr_max = static_cast<double>(a.summary.tr_max);
	if (a.partial_1 > 2.0 * tr_max + tol.eig * scale)
		identity_failure("spectral radius exceeds 2 Tr_max", a.partial_1, 2.0 * tr_max);
	if (a.partial_1 < tr_max + 1.0 - tol.eig * scale)
		identity_failure("spectral radius below Tr_max + 1", a.partial_1, tr_max + 1.0);
	return a;
}

double two_by_two_interlacing_bound(std::int64_t tr_u, std::int64_t tr_v, std::int64_t d_uv)
{
	const double sum = static_cast<double>(tr_u + tr_v);
	const double diff = static_cast<double>(tr_u - tr_v);
	const double d = static_cast<double>(d_uv);
	return (sum + std::sqrt(diff * diff + 4.0 * d * d)) / 2.0;
}

InterlacingAudit interlacing_audit(const Graph& g, const DlapAnalysis& a, const Tolerances& tol,
								   std::optional<int> alpha)
{
	InterlacingAudit audit;
	const auto& s = a.summary;
	const int n = a.n;
	const double radius = a.partial_1;
	const double margin = tol.eig * std::max(1.0, radius);

	audit.worst_slack = radius;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v) {
			const double slack = radius - two_by_two_interlacing_bound(s.tr[u], s.tr[v], s.distance(u, v));
			++audit.pairs_checked;
			if (slack < audit.worst_slack) {
				audit.worst_slack = slack;
				audit.worst_u = u;
				audit.worst_v = v;
			}
		}
	audit.pairs_ok = audit.worst_slack >= -margin;

	const double d = s.diameter;
	audit.diameter_path_bound = (2.0 * n + d * d - 2.0 * d + 1.0) / 2.0;
	audit.diameter_path_ok = radius >= audit.diameter_path_bound - margin;

	if (s.diameter == 2) {
		audit.independence_applicable = true;
		const int alpha_value = alpha ? *alpha : independence_number(g);
		audit.independence_bound = static_cast<double>(n + alpha_value);
		audit.independence_ok = radius >= audit.independence_bound - margin;
	}
	return audit;
}

} // namespace dls
