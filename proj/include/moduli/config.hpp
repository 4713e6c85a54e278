#pragma once

namespace moduli {

/// Tunables shared by the filter pipeline, the orbit search and the scanner.
struct Config {
    double tol = 1e-9;
    int p_max = 200;
    int max_iter = 1000;
    int search_depth = 8;
    double zero_eps = 1e-6;
    int threads = 0;  // 0: available hardware parallelism

    /// Throws Error(InvalidArgument) unless every field is positive and tol <= 1e-3.
    void validate() const;

    /// threads, or hardware_concurrency() when unset.
    int effective_threads() const;
};

}  // namespace moduli
