#include "springer/sigma.hpp"

#include <algorithm>
#include <tuple>

namespace springer {

Triple::Triple(Partition nu, Partition a, Partition b, OptionalForm omega)
    : nu_(std::move(nu))
    , omega_(omega)
{
    if (!a.is_two_regular() || !b.is_two_regular())
        throw DomainError("triple entries " + a.to_string() + ", " + b.to_string() +
                          " must be 2-regular");
    const bool swap = a.weight() > b.weight() || (a.weight() == b.weight() && revlex_less(b, a));
    mu1_ = swap ? std::move(b) : std::move(a);
    mu2_ = swap ? std::move(a) : std::move(b);
    if (is_diagonal() != omega_.has_value())
        throw DomainError("triple " + to_string() +
                          (omega_ ? ": only diagonal triples carry a form label"
                                  : ": diagonal triples need a form label I or II"));
}

std::string Triple::to_string() const
{
    auto s = "(" + nu_.to_string() + ";" + mu1_.to_string() + "," + mu2_.to_string() + ")";
    if (omega_)
        s += "^" + std::string(springer::to_string(*omega_));
    return s;
}

namespace {

int form_rank(OptionalForm f)
{
    if (!f)
        return 0;
    return *f == Form::I ? 1 : 2;
}

}  // namespace

bool triple_order_less(const Triple& a, const Triple& b)
{
    const auto key = [](const Triple& t) {
        return std::make_tuple(t.nu().weight(), t.mu1().weight());
    };
    if (key(a) != key(b))
        return key(a) < key(b);
    if (a.nu() != b.nu())
        return revlex_less(a.nu(), b.nu());
    if (a.mu1() != b.mu1())
        return revlex_less(a.mu1(), b.mu1());
    if (a.mu2() != b.mu2())
        return revlex_less(a.mu2(), b.mu2());
    return form_rank(a.omega()) < form_rank(b.omega());
}

std::vector<Triple> enumerate_sigma(int N)
{
    if (N < 1)
        throw DomainError("enumerate_sigma: N must be at least 1");
    const int n = N / 2;
    std::vector<Triple> out;
    for (int m = 0; m <= n; ++m) {
        const auto nus = enumerate_partitions(m);
        for (int k = 0; k <= n - m; ++k) {
            const auto firsts = enumerate_two_regular(k);
            const auto seconds = enumerate_two_regular(N - 2 * m - k);
            const bool tie = 2 * k == N - 2 * m;
            for (const auto& nu : nus) {
                for (std::size_t i = 0; i < firsts.size(); ++i) {
                    // with equal weights the swap identifies (a,b) with (b,a):
                    // keep only b at or after a in partition order
                    for (std::size_t j = tie ? i : 0; j < seconds.size(); ++j) {
                        if (tie && i == j) {
                            out.emplace_back(nu, firsts[i], seconds[j], Form::I);
                            out.emplace_back(nu, firsts[i], seconds[j], Form::II);
                        } else {
                            out.emplace_back(nu, firsts[i], seconds[j]);
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), TripleOrder{});
    return out;
}

BigInt sigma_count(int N)
{
    return enumerate_sigma(N).size();
}

SupportLevel support_level(const Triple& t, int N)
{
    if (t.rank() != N)
        throw DomainError("triple " + t.to_string() + " has rank " + std::to_string(t.rank()) +
                          ", not " + std::to_string(N));
    SupportLevel s;
    s.m = t.nu().weight();
    if (2 * s.m == N)
        s.omega = t.omega();
    return s;
}

}  // namespace springer
