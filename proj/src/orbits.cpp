#include "springer/orbits.hpp"

#include "springer/series.hpp"

namespace springer {

std::string_view to_string(Form f) noexcept
{
    return f == Form::I ? "I" : "II";
}

Form parse_form(std::string_view text)
{
    if (text == "I")
        return Form::I;
    if (text == "II")
        return Form::II;
    throw ParseError("form label must be I or II, got '" + std::string(text) + "'");
}

OrbitLabel::OrbitLabel(Partition lambda, OptionalForm form)
    : lambda_(std::move(lambda))
    , form_(form)
{
    if (lambda_.empty())
        throw DomainError("orbit label needs a non-empty partition");
    if (lambda_.all_even() != form_.has_value()) {
        throw DomainError("orbit " + lambda_.to_string() +
                          (form_ ? " has an odd part and cannot carry a form label"
                                 : " has only even parts and needs a form label I or II"));
    }
}

std::string OrbitLabel::to_string() const
{
    auto s = lambda_.to_string();
    if (form_)
        s += "^" + std::string(springer::to_string(*form_));
    return s;
}

BigInt local_system_count(int distinct_sizes, bool tagged)
{
    if (distinct_sizes < 1)
        throw DomainError("an orbit has at least one part size");
    BigInt one = 1;
    return tagged ? BigInt(one << distinct_sizes) : BigInt(one << (distinct_sizes - 1));
}

std::vector<OrbitRecord> enumerate_orbits(int N)
{
    if (N < 1)
        throw DomainError("enumerate_orbits: N must be at least 1");
    std::vector<OrbitRecord> out;
    for (auto& lambda : enumerate_partitions(N)) {
        const int k = lambda.distinct_sizes();
        if (lambda.all_even()) {
            for (Form f : {Form::I, Form::II})
                out.push_back({OrbitLabel(lambda, f), k, local_system_count(k, true)});
        } else {
            out.push_back({OrbitLabel(lambda), k, local_system_count(k, false)});
        }
    }
    return out;
}

BigInt census_count(int N)
{
    BigInt total = 0;
    for (const auto& r : enumerate_orbits(N))
        total += r.local_system_count;
    return total;
}

BigInt d_of(int k)
{
    if (k < 0)
        throw DomainError("d(k) needs k >= 0");
    BigInt sum = 0;
    for (int s = 0; s <= k; ++s)
        sum += count_q(s) * count_q(2 * k + 1 - s);
    return sum;
}

BigInt e_of(int k)
{
    if (k < 0)
        throw DomainError("e(k) needs k >= 0");
    BigInt sum = 0;
    for (int s = 0; s < k; ++s)
        sum += count_q(s) * count_q(2 * k - s);
    const BigInt qk = count_q(k);
    // q^2 + 3q = q(q+3) is always even
    return sum + (qk * qk + 3 * qk) / 2;
}

CensusReport verify_census(int N)
{
    if (N < 1)
        throw DomainError("verify_census: N must be at least 1");
    CensusReport r;
    r.N = N;
    r.by_orbits = census_count(N);

    const int n = N / 2;
    r.by_d_e = 0;
    for (int k = 0; k <= n; ++k)
        r.by_d_e += count_p(n - k) * (N % 2 ? d_of(k) : e_of(k));

    const auto ratio = product_ratio(N);
    r.by_series = ratio[N] / 2;
    if (N % 2 == 0)
        r.by_series += 3 * ratio[n] / 2;
    return r;
}

}  // namespace springer
