#include "springer/geometry.hpp"

#include <algorithm>
#include <string>

namespace springer {

namespace {

std::string args(int a, int b, int c)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void require_level(int m, int N)
{
    if (m < 1 || 2 * m > N)
        throw DomainError("need 1 <= m <= N/2, got m=" + std::to_string(m) +
                          ", N=" + std::to_string(N));
}

// ceil(x / 2) for any integer x
int ceil_half(int x)
{
    return x >= 0 ? (x + 1) / 2 : -((-x) / 2);
}

}  // namespace

Partition image_of_tau(int m, int N)
{
    require_level(m, N);
    if (N >= 3 * m) {
        const Partition::Block blocks[] = {{3, m}, {1, N - 3 * m}};
        return Partition::from_blocks(blocks);
    }
    const Partition::Block blocks[] = {{3, N - 2 * m}, {2, 3 * m - N}};
    return Partition::from_blocks(blocks);
}

Partition two_stratum(int j, int N)
{
    if (j < 0 || 2 * j > N)
        throw DomainError("need 0 <= j <= N/2 for the stratum 2^j 1^(N-2j)");
    const Partition::Block blocks[] = {{2, j}, {1, N - 2 * j}};
    return Partition::from_blocks(blocks);
}

bool stratum_in_image(int m, int j, int N)
{
    if (j < 0 || 2 * j > N)
        return false;
    return dominates(image_of_tau(m, N), two_stratum(j, N));
}

int codim_a(int m, int j, int N)
{
    if (!stratum_in_image(m, j, N))
        throw DomainError("stratum 2^j1^(N-2j) not contained in Im tau for (m,j,N)=" + args(m, j, N));
    return m * (2 * N - 3 * m) - j * (N - j);
}

KRange omega_k_range(int m, int j, int N)
{
    // bounds doubled to stay in integers: m+j-N/2 = (2m+2j-N)/2
    const int lo = std::max({ceil_half(2 * m + 2 * j - N), ceil_half(j), 0});
    const int hi = std::min(j, m);
    return {lo, hi};
}

int omega_dim(int m, int j, int N, int k)
{
    if (!omega_k_range(m, j, N).contains(k))
        throw DomainError("k=" + std::to_string(k) + " outside the non-empty range for (m,j,N)=" +
                          args(m, j, N));
    // j^2 + j and 3m^2 + m are both even
    return -2 * k * k + (-N + 3 * j + 2 * m + 1) * k + m * N - m * j -
           (j * j + 3 * m * m + j + m) / 2;
}

FiberDim fiber_dim(int m, int j, int N)
{
    const int a = codim_a(m, j, N);
    const auto range = omega_k_range(m, j, N);
    if (range.empty())
        throw DomainError("empty k-range for (m,j,N)=" + args(m, j, N));

    FiberDim out;
    out.value = omega_dim(m, j, N, range.lo);
    out.maximizing_k = range.lo;
    for (int k = range.lo + 1; k <= range.hi; ++k) {
        const int d = omega_dim(m, j, N, k);
        if (d > out.value) {
            out.value = d;
            out.maximizing_k = k;
        }
    }

    const bool upper = j >= N - 2 * m;
    const bool first_branch = (upper && N % 2 == 0) || (!upper && j % 2 == 1);
    out.twice_closed_form = first_branch ? a + j + m - N : a - m;
    if (2 * out.value != out.twice_closed_form)
        throw ConsistencyError("fiber dimension for (m,j,N)=" + args(m, j, N) + ": max over k gives " +
                               std::to_string(out.value) + ", closed form gives " +
                               std::to_string(out.twice_closed_form) + "/2");
    return out;
}

SmallnessReport smallness_report(int m, int N)
{
    require_level(m, N);
    SmallnessReport report;
    report.m = m;
    report.N = N;
    const auto open = image_of_tau(m, N);
    for (int j = 0; 2 * j <= N; ++j) {
        if (m + j >= N || !stratum_in_image(m, j, N) || two_stratum(j, N) == open)
            continue;
        if (omega_k_range(m, j, N).empty())
            continue;
        SmallnessRow row{j, fiber_dim(m, j, N).value, codim_a(m, j, N)};
        if (!row.passes())
            report.violations.push_back(j);
        report.rows.push_back(row);
    }
    return report;
}

Partition induce_orbit(const Partition& alpha, const Partition& beta, int N)
{
    if (beta.weight() + 2 * alpha.weight() != N)
        throw DomainError("induce_orbit: |beta| + 2|alpha| = " +
                          std::to_string(beta.weight() + 2 * alpha.weight()) + " != N = " +
                          std::to_string(N));
    const std::size_t len = std::max(alpha.length(), beta.length());
    std::vector<int> parts(len);
    for (std::size_t i = 0; i < len; ++i) {
        parts[i] = beta.part(i) + 2 * alpha.part(i);
        if (i > 0 && parts[i] > parts[i - 1])
            throw DomainError("induce_orbit: formula domain exceeded, " + alpha.to_string() + " and " +
                              beta.to_string() + " give a non-monotone sequence");
    }
    return Partition(std::move(parts));
}

}  // namespace springer
