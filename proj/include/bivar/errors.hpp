/*
   Copyright 2026 The bivar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BIVAR_ERRORS_HPP
#define BIVAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bivar {

/// A configured size limit would be exceeded.
struct ResourceGuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Counting on different representatives, or the regular representation, disagrees.
struct InconsistentScheme : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A common eigenvalue is irrational (or the algebra is not diagonalizable over Q).
struct NonRationalSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two eigenspaces share the pair (theta, mu).
struct NonSeparated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed object failed its exact post-condition check.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Resource limits and output settings, loadable from a JSON config file.
struct Config {
    std::size_t max_vertices = 10000;
    /// Serialized scheme files with more matrix entries than this are gzipped.
    std::size_t gzip_threshold_entries = 1u << 20;
    /// Verify intersection numbers on every vertex pair instead of two representatives.
    bool strict_intersection = false;
    /// Upper bound on classes for labeling searches.
    std::size_t max_search_classes = 12;
};

inline void guard_vertices(std::size_t v, const Config& cfg, const std::string& what) {
    if (v > cfg.max_vertices)
        throw ResourceGuardExceeded(what + ": " + std::to_string(v) + " vertices exceeds max_vertices = " +
                                    std::to_string(cfg.max_vertices));
}

}  // namespace bivar

#endif
