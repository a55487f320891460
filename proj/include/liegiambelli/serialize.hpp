#pragma once

// JSON, LaTeX and plain-text forms of series and bundles.

#include "liegiambelli/chern.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace liegiambelli {

using Json = nlohmann::ordered_json;

// {"field":"Q","order":N,"terms":[{"monomial":{"t_2":1},"coeff":"3/2"}]}
Json to_json(const GradedSeries& a);
GradedSeries series_from_json(const Json& j);

// {"rank":r,"class":<series>}
Json to_json(const FormalBundle& b);
FormalBundle bundle_from_json(const Json& j);

// Generator key used in JSON and text output, e.g. "v_1".
std::string generator_key(Generator g);
Generator parse_generator_key(const std::string& key);

// LaTeX without spaces: t_i -> w_i(M), v_i -> w_i(V), c_i -> c_i,
// w_i -> w_i. Zero renders as "0".
std::string to_latex(const GradedSeries& a);

// "1 + c_1", "26*c_1^2 + 6*c_2 - 1/2*v_1*v_2".
std::string to_text(const GradedSeries& a);

}  // namespace liegiambelli
