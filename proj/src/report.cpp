#include "lerchlab/report.hpp"

#include "lerchlab/hodge_eps.hpp"

namespace lerchlab {

using nlohmann::json;

json complex_json(const BigComplex& z, long digits) {
    return json{{"re", z.re().str(digits)}, {"im", z.im().str(digits)}};
}

json report_json(const IdentityReport& rep, long digits) {
    return json{{"name", rep.name},
                {"params", rep.params},
                {"lhs", complex_json(rep.lhs, digits)},
                {"rhs", complex_json(rep.rhs, digits)},
                {"abs_err", rep.abs_err.str(8)},
                {"rel_err", rep.rel_err.str(8)},
                {"tolerance", rep.tolerance.str(8)},
                {"pass", rep.pass},
                {"precision_bits", rep.precision_bits},
                {"elapsed_ms", 0}};
}

json make_envelope(const std::string& suite, long digits, json results) {
    long total = static_cast<long>(results.size());
    long passed = 0;
    for (const auto& r : results)
        if (!r.contains("pass") || r["pass"].get<bool>()) ++passed;
    return json{{"suite", suite},
                {"config", json{{"digits", digits}, {"precision_bits", bits_for_digits(digits)}}},
                {"results", std::move(results)},
                {"summary", json{{"total", total},
                                 {"passed", passed},
                                 {"failed", total - passed},
                                 {"elapsed_ms", 0}}}};
}

std::string report_schema() {
    static const char* schema = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "type": "object",
  "required": ["suite", "config", "results", "summary"],
  "properties": {
    "suite": {"type": "string"},
    "config": {
      "type": "object",
      "required": ["digits", "precision_bits"],
      "properties": {
        "digits": {"type": "integer"},
        "precision_bits": {"type": "integer"}
      }
    },
    "results": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "pass"],
        "properties": {
          "name": {"type": "string"},
          "params": {"type": "string"},
          "lhs": {"$ref": "#/definitions/complex"},
          "rhs": {"$ref": "#/definitions/complex"},
          "abs_err": {"type": "string"},
          "rel_err": {"type": "string"},
          "tolerance": {"type": "string"},
          "pass": {"type": "boolean"},
          "precision_bits": {"type": "integer"},
          "elapsed_ms": {"type": "integer"}
        }
      }
    },
    "summary": {
      "type": "object",
      "required": ["total", "passed", "failed", "elapsed_ms"],
      "properties": {
        "total": {"type": "integer"},
        "passed": {"type": "integer"},
        "failed": {"type": "integer"},
        "elapsed_ms": {"type": "integer"}
      }
    }
  },
  "definitions": {
    "complex": {
      "type": "object",
      "required": ["re", "im"],
      "properties": {"re": {"type": "string"}, "im": {"type": "string"}}
    }
  }
})";
    return schema;
}

}  // namespace lerchlab
