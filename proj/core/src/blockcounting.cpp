#include "phasesfs/blockcounting.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace phasesfs {

namespace {

constexpr int kMaxSampleSize = 30;

struct MergeEvent {
    int i = 0;       // smaller block size
    int j = 0;       // larger block size
    long rate = 0;   // a_i * a_j, or a_i choose 2 when i == j
    std::vector<int> target;  // empty when the merge coalesces to one block
};

// All pairwise merges available from state a, ordered by decreasing rate
// with ties broken by the ascending (i,j) pair.
std::vector<MergeEvent> merge_events(const std::vector<int>& a, int n) {
    std::vector<MergeEvent> events;
    for (int i = 1; i <= n - 1; ++i) {
        if (a[i - 1] == 0) {
            continue;
        }
        for (int j = i; j <= n - 1; ++j) {
            if (a[j - 1] == 0) {
                continue;
            }
            long rate = 0;
            if (i == j) {
                rate = static_cast<long>(a[i - 1]) * (a[i - 1] - 1) / 2;
            } else {
                rate = static_cast<long>(a[i - 1]) * a[j - 1];
            }
            if (rate == 0) {
                continue;
            }
            MergeEvent ev;
            ev.i = i;
            ev.j = j;
            ev.rate = rate;
            if (i + j < n) {
                ev.target = a;
                ev.target[i - 1] -= 1;
                ev.target[j - 1] -= 1;  // i == j decrements the same entry twice
                ev.target[i + j - 1] += 1;
            }
            events.push_back(std::move(ev));
        }
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const MergeEvent& x, const MergeEvent& y) {
                         if (x.rate != y.rate) {
                             return x.rate > y.rate;
                         }
                         if (x.i != y.i) {
                             return x.i < y.i;
                         }
                         return x.j < y.j;
                     });
    return events;
}

}  // namespace

RealMatrix BlockCountingModel::state_matrix() const {
    RealMatrix A(size(), n - 1);
    for (int s = 0; s < size(); ++s) {
        for (int j = 0; j < n - 1; ++j) {
            A(s, j) = static_cast<double>(states[s][j]);
        }
    }
    return A;
}

RealVector BlockCountingModel::exit_rates() const {
    return RealVector(-T.rowwise().sum());
}

int BlockCountingModel::lineage_count(int state) const {
    int total = 0;
    for (int c : states[state]) {
        total += c;
    }
    return total;
}

std::uint64_t partition_count(int n) {
    if (n < 0) {
        return 0;
    }
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int s = part; s <= n; ++s) {
            p[s] += p[s - part];
        }
    }
    return p[n];
}

std::uint64_t state_count(int n) {
    if (n < 2) {
        throw InvalidSampleSize("state_count: need n >= 2, got " +
                                std::to_string(n));
    }
    return partition_count(n) - 1;
}

BlockCountingModel build_model(int n) {
    if (n < 2) {
        throw InvalidSampleSize("build_model: need n >= 2, got " +
                                std::to_string(n));
    }
    if (n > kMaxSampleSize) {
        throw SampleSizeTooLarge("build_model: n = " + std::to_string(n) +
                                 " exceeds the supported maximum of " +
                                 std::to_string(kMaxSampleSize));
    }

    BlockCountingModel model;
    model.n = n;

    std::vector<int> initial(n - 1, 0);
    initial[0] = n;

    // Breadth-first discovery; FIFO processing keeps states grouped by
    // decreasing lineage count because every merge removes one lineage.
    std::map<std::vector<int>, int> index;
    index.emplace(initial, 0);
    model.states.push_back(initial);
    std::vector<std::vector<MergeEvent>> outgoing;
    for (std::size_t s = 0; s < model.states.size(); ++s) {
        auto events = merge_events(model.states[s], n);
        for (const MergeEvent& ev : events) {
            if (ev.target.empty()) {
                continue;  // coalesced to a single block: absorption
            }
            if (index.emplace(ev.target, model.states.size()).second) {
                model.states.push_back(ev.target);
            }
        }
        outgoing.push_back(std::move(events));
    }

    const int p = model.size();
    model.T = RealMatrix::Zero(p, p);
    for (int s = 0; s < p; ++s) {
        long total = 0;
        for (const MergeEvent& ev : outgoing[s]) {
            total += ev.rate;
            if (!ev.target.empty()) {
                model.T(s, index.at(ev.target)) += static_cast<double>(ev.rate);
            }
        }
        model.T(s, s) = -static_cast<double>(total);
    }

    model.alpha = RealVector::Zero(p);
    model.alpha(0) = 1.0;
    return model;
}

}  // namespace phasesfs
