#include "moduli/config.hpp"

#include <thread>

#include "moduli/error.hpp"

namespace moduli {

void Config::validate() const {
    if (!(tol > 0.0) || tol > 1e-3) throw Error(ErrorKind::InvalidArgument, "tol must be in (0, 1e-3]");
    if (p_max < 2) throw Error(ErrorKind::InvalidArgument, "p_max must be >= 2");
    if (max_iter < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be >= 1");
    if (search_depth < 1) throw Error(ErrorKind::InvalidArgument, "search_depth must be >= 1");
    if (!(zero_eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "zero_eps must be positive");
    if (threads < 0) throw Error(ErrorKind::InvalidArgument, "threads must be positive");
}

int Config::effective_threads() const {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace moduli
