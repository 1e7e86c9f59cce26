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

#ifndef BIVAR_IO_HPP
#define BIVAR_IO_HPP

#include "bivar/bivariate_p.hpp"
#include "bivar/errors.hpp"
#include "bivar/scheme.hpp"
#include "bivar/spectra.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace bivar {

using nlohmann::json;

inline constexpr int schema_version = 1;

/// Malformed or unreadable input file.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Index& i);
Index index_from_json(const json& j);
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"kind":"vertex", "domain", "vertex_count", "matrices":{"i,j":[[0,1,..],..]}}
json scheme_to_json(const VertexScheme& s);
VertexScheme scheme_from_json(const json& j);

/// {"kind":"algebra", "domain", "rows":{"a":{"b":{"c":"p/q"}}}}; zero entries omitted.
json tensor_to_json(const IntersectionTensor& t);
IntersectionTensor tensor_from_json(const json& j);

json polys_to_json(const PolyFamily& v);
json verdict_to_json(const MetricVerdict& v);
json minimal_type_to_json(const MinimalType& m);
json axioms_to_json(const AxiomReport& r);
json spectrum_to_json(const Spectrum& sp);

using SchemeFile = std::variant<VertexScheme, IntersectionTensor>;

/// Writes @p j, gzipped when @p gzip is set.
void write_json_file(const std::string& path, const json& j, bool gzip);
/// Reads plain or gzipped JSON (detected from the magic bytes). Throws SchemaError.
json read_json_file(const std::string& path);

/// Serializes and writes a scheme, gzipped above cfg.gzip_threshold_entries matrix entries.
void write_scheme_file(const std::string& path, const SchemeFile& s, const Config& cfg = {});
SchemeFile read_scheme_file(const std::string& path);

/// Keys max_vertices, gzip_threshold_entries, strict_intersection, max_search_classes.
Config config_from_json(const json& j);
Config load_config(const std::string& path);

}  // namespace bivar

#endif
