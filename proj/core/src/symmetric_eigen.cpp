#include "dls/symmetric_eigen.hpp"

#include "dls/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace dls {

SymmetricMatrix::SymmetricMatrix(int n)
	: n_(n)
	, a_(static_cast<std::size_t>(n) * n, 0.0)
{
	if (n < 0)
		throw InvalidParams("matrix dimension must be nonnegative");
}

SymmetricMatrix::SymmetricMatrix(int n, std::vector<double> entries)
	: n_(n)
	, a_(std::move(entries))
{
	if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n)
		throw InvalidParams("matrix entry count does not match dimension " + std::to_string(n));
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j) {
			const double x = (*this)(i, j);
			if (!std::isfinite(x))
				throw InvalidParams("non-finite matrix entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
			if (j > i && x != (*this)(j, i))
				throw InvalidParams("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
		}
	}
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d)
{
	SymmetricMatrix m(static_cast<int>(d.size()));
	for (int i = 0; i < m.n_; ++i)
		m.set(i, i, d[i]);
	return m;
}

void SymmetricMatrix::set(int i, int j, double value)
{
	if (!std::isfinite(value))
		throw InvalidParams("non-finite matrix entry");
	a_[static_cast<std::size_t>(i) * n_ + j] = value;
	a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymmetricMatrix::trace() const noexcept
{
	double t = 0.0;
	for (int i = 0; i < n_; ++i)
		t += (*this)(i, i);
	return t;
}

double SymmetricMatrix::frobenius_squared() const noexcept
{
	return std::inner_product(a_.begin(), a_.end(), a_.begin(), 0.0);
}

double SymmetricMatrix::row_radius(int i) const noexcept
{
	double r = 0.0;
	for (int j = 0; j < n_; ++j)
		if (j != i)
			r += std::abs((*this)(i, j));
	return r;
}

double Spectrum::sum() const noexcept
{
	return std::accumulate(values.begin(), values.end(), 0.0);
}

double Spectrum::sum_of_squares() const noexcept
{
	return std::inner_product(values.begin(), values.end(), values.begin(), 0.0);
}

namespace {

// Householder reduction of a full symmetric matrix to tridiagonal form.
// On return d holds the diagonal and e the subdiagonal, with e[0] = 0 and
// e[i] coupling rows i-1 and i. Eigenvectors are not accumulated.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e)
{
	auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

	for (int i = n - 1; i > 0; --i) {
		const int l = i - 1;
		double h = 0.0;
		if (l > 0) {
			double scale = 0.0;
			for (int k = 0; k <= l; ++k)
				scale += std::abs(at(i, k));
			if (scale == 0.0) {
				e[i] = at(i, l);
			} else {
				for (int k = 0; k <= l; ++k) {
					at(i, k) /= scale;
					h += at(i, k) * at(i, k);
				}
				double f = at(i, l);
				const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
				e[i] = scale * g;
				h -= f * g;
				at(i, l) = f - g;
				f = 0.0;
				for (int j = 0; j <= l; ++j) {
					double gj = 0.0;
					for (int k = 0; k <= j; ++k)
						gj += at(j, k) * at(i, k);
					for (int k = j + 1; k <= l; ++k)
						gj += at(k, j) * at(i, k);
					e[j] = gj / h;
					f += e[j] * at(i, j);
				}
				const double hh = f / (h + h);
				for (int j = 0; j <= l; ++j) {
					const double fj = at(i, j);
					const double gj = e[j] - hh * fj;
					e[j] = gj;
					for (int k = 0; k <= j; ++k)
						at(j, k) -= fj * e[k] + gj * at(i, k);
				}
			}
		} else {
			e[i] = at(i, l);
		}
		d[i] = h;
	}
	for (int i = 0; i < n; ++i)
		d[i] = at(i, i);
	e[0] = 0.0;
}

// Implicit-shift QL on a symmetric tridiagonal matrix (diagonal d, subdiagonal e
// in the layout produced above). Eigenvalues are left in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, int n)
{
	for (int i = 1; i < n; ++i)
		e[i - 1] = e[i];
	if (n > 0)
		e[n - 1] = 0.0;

	const long sweep_limit = 30L * std::max(n, 1);
	long sweeps = 0;
	constexpr double eps = std::numeric_limits<double>::epsilon();

	for (int l = 0; l < n; ++l) {
		for (;;) {
			int m = l;
			for (; m < n - 1; ++m) {
				const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
				if (std::abs(e[m]) <= eps * dd)
					break;
			}
			if (m == l)
				break;
			if (++sweeps > sweep_limit)
				throw IterationLimit("QL iteration exceeded " + std::to_string(sweep_limit) + " sweeps on a "
									 + std::to_string(n) + "x" + std::to_string(n) + " matrix");

			double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
			double r = std::hypot(g, 1.0);
			g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
			double s = 1.0;
			double c = 1.0;
			double p = 0.0;
			int i = m - 1;
			for (; i >= l; --i) {
				double f = s * e[i];
				const double b = c * e[i];
				r = std::hypot(f, g);
				e[i + 1] = r;
				if (r == 0.0) {
					d[i + 1] -= p;
					e[m] = 0.0;
					break;
				}
				s = f / r;
				c = g / r;
				g = d[i + 1] - p;
				r = (d[i] - g) * s + 2.0 * c * b;
				p = s * r;
				d[i + 1] = g + p;
				g = c * r - b;
			}
			if (r == 0.0 && i >= l)
				continue;
			d[l] -= p;
			e[l] = g;
			e[m] = 0.0;
		}
	}
}

} // namespace

Spectrum symmetric_eigenvalues(const SymmetricMatrix& m, double cluster_tol)
{
	const int n = m.dim();
	Spectrum out;
	out.tol = cluster_tol;
	if (n == 0)
		return out;

	std::vector<double> a(m.entries().begin(), m.entries().end());
	std::vector<double> d(n, 0.0);
	std::vector<double> e(n, 0.0);
	tridiagonalize(a, n, d, e);
	tridiagonal_ql(d, e, n);

	std::sort(d.begin(), d.end(), std::greater<>());
	out.values = std::move(d);
	return out;
}

std::vector<EigenCluster> cluster_multiplicities(const Spectrum& s, double tol)
{
	if (!(tol > 0.0))
		throw InvalidParams("clustering tolerance must be positive");

	std::vector<EigenCluster> clusters;
	double running_sum = 0.0;
	for (double v : s.values) {
		if (!clusters.empty()) {
			auto& cur = clusters.back();
			if (std::abs(v - cur.value) <= tol) {
				running_sum += v;
				++cur.multiplicity;
				cur.value = running_sum / cur.multiplicity;
				continue;
			}
		}
		clusters.push_back({v, 1});
		running_sum = v;
	}
	return clusters;
}

} // namespace dls
