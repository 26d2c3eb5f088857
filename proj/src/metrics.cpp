#include "gaze/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gaze {

AttentionRow AttentionRow::from_values(std::vector<double> values) {
    if (values.empty()) throw ValidationError("attention row must be nonempty");
    double sum = 0.0;
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ValidationError("attention entries must be finite and nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-3)
        throw ValidationError("attention row sum deviates from 1 by more than 1e-3");
    if (sum != 1.0)
        for (double& v : values) v /= sum;
    AttentionRow row;
    row.a = std::move(values);
    return row;
}

void CriticalSet::validate(std::size_t n) const {
    if (indices.empty()) throw ValidationError("critical set must be nonempty");
    for (std::size_t i : indices)
        if (i >= n) throw ValidationError("critical index out of range");
}

double gcs(const std::vector<double>& token_logprobs) {
    if (token_logprobs.empty()) throw ValidationError("gcs requires at least one log-probability");
    double sum = 0.0;
    for (double lp : token_logprobs) {
        if (!std::isfinite(lp)) throw ValidationError("non-finite log-probability");
        sum += lp;
    }
    return sum / static_cast<double>(token_logprobs.size());
}

double rfs(const AttentionRow& row, std::size_t k) {
    const std::size_t n = row.size();
    if (k < 1 || k > n) throw ValidationError("rfs requires 1 <= k <= n");
    double tail = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total += row.a[i];
        if (i >= n - k) tail += row.a[i];
    }
    return tail / total;
}

double afs(const AttentionRow& row, const CriticalSet& critical) {
    critical.validate(row.size());
    double sum = 0.0;
    for (std::size_t i : critical.indices) sum += row.a[i];
    return sum / static_cast<double>(critical.indices.size());
}

double attention_entropy(const AttentionRow& row) {
    double h = 0.0;
    for (double v : row.a)
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

double entropy_sum(const std::vector<AttentionRow>& rows) {
    double total = 0.0;
    for (const auto& r : rows) total += attention_entropy(r);
    return total;
}

WelchResult welch_test(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() < 2 || b.size() < 2)
        throw ValidationError("welch test requires at least two samples per group");
    auto mean_var = [](const std::vector<double>& x) {
        const double n = static_cast<double>(x.size());
        const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
        double ss = 0.0;
        for (double v : x) ss += (v - mean) * (v - mean);
        return std::make_pair(mean, ss / (n - 1.0));
    };
    const auto [ma, va] = mean_var(a);
    const auto [mb, vb] = mean_var(b);
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    const double se2 = va / na + vb / nb;
    WelchResult res;
    if (se2 == 0.0) {
        res.t = ma == mb ? 0.0 : std::numeric_limits<double>::infinity();
        res.df = na + nb - 2.0;
        res.p = ma == mb ? 1.0 : 0.0;
        return res;
    }
    res.t = (ma - mb) / std::sqrt(se2);
    res.df = se2 * se2 /
             (va * va / (na * na * (na - 1.0)) + vb * vb / (nb * nb * (nb - 1.0)));
    boost::math::students_t dist(res.df);
    res.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(res.t)));
    return res;
}

MetricsInput metrics_input_from_json(const json& j) {
    MetricsInput in;
    try {
        for (const auto& row : j.at("rows"))
            in.rows.push_back(AttentionRow::from_values(row.get<std::vector<double>>()));
        if (j.contains("critical"))
            in.critical.indices = j.at("critical").get<std::vector<std::size_t>>();
        if (j.contains("k")) in.k = j.at("k").get<std::size_t>();
        if (j.contains("logprobs")) in.logprobs = j.at("logprobs").get<std::vector<double>>();
        if (j.contains("welch")) {
            in.welch_a = j.at("welch").at("a").get<std::vector<double>>();
            in.welch_b = j.at("welch").at("b").get<std::vector<double>>();
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad attention input: ") + e.what());
    }
    return in;
}

json evaluate_metrics(const MetricsInput& in) {
    json out;
    json rfs_arr = json::array(), afs_arr = json::array(), ent_arr = json::array();
    double rfs_sum = 0.0, afs_sum = 0.0, ent_total = 0.0;
    for (const auto& row : in.rows) {
        const double r = rfs(row, in.k);
        const double h = attention_entropy(row);
        rfs_arr.push_back(r);
        ent_arr.push_back(h);
        rfs_sum += r;
        ent_total += h;
        if (!in.critical.indices.empty()) {
            const double f = afs(row, in.critical);
            afs_arr.push_back(f);
            afs_sum += f;
        }
    }
    const double n = static_cast<double>(in.rows.size());
    out["rfs"] = rfs_arr;
    out["entropy"] = ent_arr;
    out["entropy_sum"] = ent_total;
    if (n > 0) {
        out["rfs_mean"] = rfs_sum / n;
        out["entropy_mean"] = ent_total / n;
    }
    if (!in.critical.indices.empty() && n > 0) {
        out["afs"] = afs_arr;
        out["afs_mean"] = afs_sum / n;
    }
    if (!in.logprobs.empty()) out["gcs"] = gcs(in.logprobs);
    if (!in.welch_a.empty() || !in.welch_b.empty()) {
        const WelchResult w = welch_test(in.welch_a, in.welch_b);
        out["welch_t"] = w.t;
        out["welch_df"] = w.df;
        out["welch_p"] = w.p;
    }
    return out;
}

}  // namespace gaze
