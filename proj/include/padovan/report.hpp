#pragma once

#include "padovan/params.hpp"

#include "json.hpp"

#include <complex>
#include <string>
#include <vector>

namespace padovan {

// Key order in emitted JSON is part of the output contract (identical
// configurations must produce byte-identical bytes), hence ordered_json.
using Json = nlohmann::ordered_json;

// One CSV field per RFC 4180: quoted when the content requires it or when
// the caller asks (exact rationals are always emitted quoted).
std::string csv_field(const std::string& raw, bool force_quote = false);
// Joins fields with commas and terminates with a single LF.
std::string csv_row(const std::vector<std::string>& fields);

// JSON cannot hold infinities or NaN, so non-finite doubles become the
// strings "inf", "-inf", "nan"; finite values stay numbers.
Json json_double(double v);
Json json_complex(const std::complex<double>& v);

// Both coordinate forms of the parameters, each as an exact string, so any
// output file identifies its own run.
Json params_json(const Params& params);
std::string params_echo(const Params& params);

// The single-object envelope every JSON report uses. Pass summary as a null
// Json to omit the key.
Json document(const std::string& command, const Params& params, Json run, Json data,
              Json summary = Json());

}  // namespace padovan
