// Copyright 2026 The pathsum Authors
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
#include "pathsum/parallel.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace pathsum {

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned n) {
    g_max_threads = n;
}

unsigned max_threads() {
    unsigned n = g_max_threads.load();
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
    }
    return n;
}

void parallel_for(std::size_t n, std::size_t grain,
                  const std::function<void(std::size_t, std::size_t)> &body) {
    if (n == 0) {
        return;
    }
    grain = std::max<std::size_t>(grain, 1);
    std::size_t n_chunks = (n + grain - 1) / grain;
    std::size_t n_workers = std::min<std::size_t>(max_threads(), n_chunks);
    if (n_workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; c++) {
            body(c * grain, std::min(n, (c + 1) * grain));
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) {
                return;
            }
            try {
                body(c * grain, std::min(n, (c + 1) * grain));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = n_chunks;
                return;
            }
        }
    };
    {
        std::vector<std::jthread> threads;
        threads.reserve(n_workers - 1);
        for (std::size_t w = 1; w < n_workers; w++) {
            threads.emplace_back(worker);
        }
        worker();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

Amplitude parallel_sum(std::size_t n, const std::function<Amplitude(std::size_t)> &term,
                       std::size_t grain) {
    grain = std::max<std::size_t>(grain, 1);
    std::size_t n_chunks = (n + grain - 1) / grain;
    std::vector<Amplitude> partial(n_chunks);
    parallel_for(n_chunks, 1, [&](std::size_t c0, std::size_t c1) {
        for (std::size_t c = c0; c < c1; c++) {
            Amplitude acc = 0.0;
            std::size_t end = std::min(n, (c + 1) * grain);
            for (std::size_t i = c * grain; i < end; i++) {
                acc += term(i);
            }
            partial[c] = acc;
        }
    });
    Amplitude total = 0.0;
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

}  // namespace pathsum
