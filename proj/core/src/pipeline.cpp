#include "netrecon/pipeline.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace netrecon {

SolveResult solve_instance(const ExperimentGraph& g, const SolveOptions& opts) {
    SolveResult result;
    result.validity = validate(g);
    result.extensions = minimal_valid_extensions(g, opts.max_hidden);
    if (!result.extensions.feasible) return result;

    const auto& extensions = result.extensions.extensions;
    std::vector<SolveResult::PerExtension> slots(extensions.size());

    // Extensions are independent; each worker claims the next open slot.
    // Slot order, not completion order, decides the output.
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= extensions.size()) return;
            ExperimentGraph ext = extend(g, extensions[i]);
            SearchConfig cfg;
            cfg.bounds = compute_bounds(ext);
            if (opts.tighten) cfg.bounds = tighten_bounds(ext, cfg.bounds);
            cfg.project_on_reactions = opts.project;
            cfg.enumerate_all_orders = !opts.project;
            slots[i].extension = extensions[i];
            slots[i].bounds = cfg.bounds;
            slots[i].solutions = enumerate_structures_all(ext, cfg);
        }
    };

    std::size_t threads = static_cast<std::size_t>(opts.workers < 1 ? 1 : opts.workers);
    if (threads > extensions.size()) threads = extensions.size();
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&, t]() {
                try {
                    work();
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    result.results = std::move(slots);
    return result;
}

}  // namespace netrecon
