// Copyright 2026 The netcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcert/data.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <thread>

#include "netcert/io.h"

namespace netcert {

std::uint64_t CountsSetting::total() const {
    std::uint64_t t = 0;
    for (const auto &[k, c] : counts) {
        t += c;
    }
    return t;
}

std::uint64_t CountsTable::total() const {
    std::uint64_t t = 0;
    for (const auto &s : settings) {
        t += s.total();
    }
    return t;
}

const CountsSetting *CountsTable::find(const std::string &bases) const {
    for (const auto &s : settings) {
        if (s.bases == bases) {
            return &s;
        }
    }
    return nullptr;
}

CountsTable parse_counts(const nlohmann::ordered_json &doc) {
    if (!doc.is_object() || !doc.contains("settings") || !doc["settings"].is_array()) {
        throw DataError("counts file needs a 'settings' array");
    }
    CountsTable t;
    std::size_t width = 0;
    for (const auto &s : doc["settings"]) {
        if (!s.is_object() || !s.contains("bases") || !s["bases"].is_string() || !s.contains("counts") ||
            !s["counts"].is_object()) {
            throw DataError("each setting needs 'bases' and 'counts'");
        }
        CountsSetting cs;
        cs.bases = s["bases"].get<std::string>();
        if (cs.bases.empty() || cs.bases.find_first_not_of("XYZ") != std::string::npos) {
            throw DataError("unknown bases '" + cs.bases + "'");
        }
        if (width == 0) {
            width = cs.bases.size();
        } else if (cs.bases.size() != width) {
            throw DataError("settings disagree on the number of parties");
        }
        if (t.find(cs.bases)) {
            throw DataError("duplicate setting " + cs.bases);
        }
        for (auto it = s["counts"].begin(); it != s["counts"].end(); ++it) {
            const std::string &key = it.key();
            if (key.size() != width || key.find_first_not_of("01") != std::string::npos) {
                throw DataError("malformed outcome '" + key + "' in setting " + cs.bases);
            }
            const auto &v = it.value();
            if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)) {
                throw DataError("count for " + key + " in setting " + cs.bases + " must be a nonnegative integer");
            }
            cs.counts[key] = v.get<std::uint64_t>();
        }
        t.settings.push_back(std::move(cs));
    }
    return t;
}

CountsTable load_counts(const std::string &path) {
    return parse_counts(read_json_file(path));
}

nlohmann::ordered_json counts_to_json(const CountsTable &t) {
    auto settings = nlohmann::ordered_json::array();
    for (const auto &s : t.settings) {
        nlohmann::ordered_json counts = nlohmann::ordered_json::object();
        for (const auto &[k, c] : s.counts) {
            counts[k] = c;
        }
        settings.push_back({{"bases", s.bases}, {"counts", counts}});
    }
    return {{"settings", settings}};
}

void save_counts(const CountsTable &t, const std::string &path) {
    write_file_atomic(path, counts_to_json(t).dump(1) + "\n");
}

namespace {

std::size_t outcome_index(const std::string &bits) {
    // Little-endian in party order, matching Distribution::encode_outputs for binary outputs.
    std::size_t idx = 0;
    for (std::size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            idx |= std::size_t{1} << k;
        }
    }
    return idx;
}

std::string outcome_bits(std::size_t idx, int n) {
    std::string s(n, '0');
    for (int k = 0; k < n; k++) {
        if ((idx >> k) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

void fill_setting(Distribution &d, std::size_t input_index, const std::vector<std::uint64_t> &counts) {
    std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total == 0) {
        throw DataError("setting without events");
    }
    for (std::size_t a = 0; a < counts.size(); a++) {
        d.at(a, input_index) = static_cast<double>(counts[a]) / static_cast<double>(total);
    }
}

std::vector<std::uint64_t> dense_counts(const CountsSetting &s) {
    std::vector<std::uint64_t> c(std::size_t{1} << s.bases.size(), 0);
    for (const auto &[k, v] : s.counts) {
        c[outcome_index(k)] += v;
    }
    return c;
}

}  // namespace

Distribution setting_distribution(const CountsSetting &s) {
    const int n = static_cast<int>(s.bases.size());
    Distribution d(std::vector<int>(n, 1), std::vector<int>(n, 2));
    fill_setting(d, 0, dense_counts(s));
    return d;
}

std::string bases_for_inputs(const std::vector<std::string> &alphabets, const std::vector<int> &inputs) {
    std::string s;
    for (std::size_t p = 0; p < alphabets.size(); p++) {
        s += alphabets[p].at(inputs[p]);
    }
    return s;
}

namespace {

Distribution assemble_distribution(const CountsTable &t, const std::vector<std::string> &alphabets,
                                   const std::function<std::vector<std::uint64_t>(const CountsSetting &)> &get) {
    const int n = static_cast<int>(alphabets.size());
    if (n == 0 || n != t.num_parties()) {
        throw DataError("one basis alphabet per party is required");
    }
    std::vector<int> n_inputs;
    for (const auto &a : alphabets) {
        if (a.empty() || a.find_first_not_of("XYZ") != std::string::npos) {
            throw DataError("invalid basis alphabet '" + a + "'");
        }
        n_inputs.push_back(static_cast<int>(a.size()));
    }
    Distribution d(n_inputs, std::vector<int>(n, 2));
    for (std::size_t x = 0; x < d.num_input_tuples(); x++) {
        std::string bases = bases_for_inputs(alphabets, d.decode_inputs(x));
        const CountsSetting *s = t.find(bases);
        if (!s) {
            throw DataError("counts table has no setting " + bases);
        }
        fill_setting(d, x, get(*s));
    }
    return d;
}

}  // namespace

Distribution to_distribution(const CountsTable &t, const std::vector<std::string> &alphabets) {
    return assemble_distribution(t, alphabets, dense_counts);
}

CountsTable sample_synthetic(const Distribution &p, const std::vector<std::string> &alphabets,
                             std::uint64_t n_events, std::uint64_t seed) {
    if (n_events < 1) {
        throw DataError("at least one event per setting is required");
    }
    const int n = p.num_parties();
    if (static_cast<int>(alphabets.size()) != n) {
        throw DataError("one basis alphabet per party is required");
    }
    for (int q = 0; q < n; q++) {
        if (p.n_outputs()[q] != 2 || static_cast<int>(alphabets[q].size()) != p.n_inputs()[q]) {
            throw DataError("alphabets must label every input of a binary-outcome distribution");
        }
    }
    std::mt19937_64 rng(seed);
    CountsTable t;
    for (std::size_t x = 0; x < p.num_input_tuples(); x++) {
        CountsSetting s;
        s.bases = bases_for_inputs(alphabets, p.decode_inputs(x));
        // Multinomial as a chain of conditional binomials.
        std::uint64_t left = n_events;
        double mass = 1.0;
        for (std::size_t a = 0; a < p.num_output_tuples() && left > 0; a++) {
            double q = std::clamp(p.at(a, x), 0.0, 1.0);
            std::uint64_t k = left;
            if (a + 1 < p.num_output_tuples() && mass > 0.0) {
                double prob = std::clamp(q / mass, 0.0, 1.0);
                std::binomial_distribution<std::uint64_t> bin(left, prob);
                k = bin(rng);
            }
            mass -= q;
            if (k > 0) {
                s.counts[outcome_bits(a, n)] = k;
                left -= k;
            }
        }
        t.settings.push_back(std::move(s));
    }
    return t;
}

std::uint64_t repetition_seed(std::uint64_t seed, std::uint64_t r) {
    std::uint64_t z = seed + r + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

BootstrapResult bootstrap_witness(const CountsTable &t, const std::vector<std::string> &alphabets, const Witness &w,
                                  double fraction, int reps, std::uint64_t seed, int threads) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw DataError("fraction must lie in (0, 1]");
    }
    if (reps < 2) {
        throw DataError("at least two repetitions are needed for a standard deviation");
    }
    // Expanded event lists per setting, in table order.
    std::vector<std::vector<std::uint32_t>> events(t.settings.size());
    std::vector<std::uint64_t> take(t.settings.size());
    BootstrapResult res;
    res.fraction = fraction;
    res.repetitions = reps;
    for (std::size_t k = 0; k < t.settings.size(); k++) {
        auto c = dense_counts(t.settings[k]);
        for (std::size_t a = 0; a < c.size(); a++) {
            events[k].insert(events[k].end(), c[a], static_cast<std::uint32_t>(a));
        }
        double want = std::ceil(fraction * static_cast<double>(events[k].size()) - 1e-9);
        if (fraction * static_cast<double>(events[k].size()) < 1.0) {
            throw DataError("fraction leaves no events in setting " + t.settings[k].bases);
        }
        take[k] = static_cast<std::uint64_t>(want);
        res.events_per_repetition += take[k];
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < t.settings.size(); k++) {
        index[t.settings[k].bases] = k;
    }
    res.values.assign(reps, 0.0);
    auto run = [&](int r) {
        std::mt19937_64 rng(repetition_seed(seed, static_cast<std::uint64_t>(r)));
        std::vector<std::vector<std::uint64_t>> sub(t.settings.size());
        for (std::size_t k = 0; k < t.settings.size(); k++) {
            std::vector<std::uint32_t> ev = events[k];
            sub[k].assign(std::size_t{1} << t.settings[k].bases.size(), 0);
            for (std::uint64_t i = 0; i < take[k]; i++) {
                std::uniform_int_distribution<std::size_t> pick(i, ev.size() - 1);
                std::swap(ev[i], ev[pick(rng)]);
                sub[k][ev[i]]++;
            }
        }
        Distribution d = assemble_distribution(t, alphabets, [&](const CountsSetting &s) {
            return sub[index.at(s.bases)];
        });
        res.values[r] = w.evaluate(d);
    };
    const int nt = std::max(1, std::min(threads, reps));
    if (nt == 1) {
        for (int r = 0; r < reps; r++) {
            run(r);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int i = 0; i < nt; i++) {
            pool.emplace_back([&] {
                for (int r; (r = next++) < reps;) {
                    run(r);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    double sum = std::accumulate(res.values.begin(), res.values.end(), 0.0);
    res.mean = sum / reps;
    double ss = 0.0;
    for (double v : res.values) {
        ss += (v - res.mean) * (v - res.mean);
    }
    res.std = std::sqrt(ss / (reps - 1));
    res.band_low = res.mean - 5.0 * res.std;
    res.band_high = res.mean + 5.0 * res.std;
    return res;
}

std::string bootstrap_csv(const std::vector<BootstrapResult> &curve) {
    std::string out = "fraction,events,mean,std,band_low,band_high\n";
    char buf[256];
    for (const auto &r : curve) {
        std::snprintf(buf, sizeof buf, "%.6g,%llu,%.17g,%.17g,%.17g,%.17g\n", r.fraction,
                      static_cast<unsigned long long>(r.events_per_repetition), r.mean, r.std, r.band_low,
                      r.band_high);
        out += buf;
    }
    return out;
}

}  // namespace netcert
