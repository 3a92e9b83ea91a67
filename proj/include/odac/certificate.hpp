#pragma once

#include <string>
#include <vector>

#include "odac/construct.hpp"

namespace odac {

/// Self-describing decomposition document. The canonical serialization is
/// byte-deterministic (fixed key order, fixed component order, integers and
/// strings only); the digest is the SHA-256 of the canonical body without the
/// digest field itself.
struct Certificate {
  std::string format_version = "1";
  std::string ring;  // descriptor text
  std::string family;
  std::size_t size = 0;
  Provenance provenance;
  struct Component {
    std::string name;
    std::vector<Matrix> generators;  // algebra elements as matrices
  };
  std::vector<Component> components;
  std::string digest;
};

Certificate make_certificate(const Decomposition& d);

/// Full document text (pretty-printed JSON, trailing newline), including the
/// digest; byte-identical across runs for the same decomposition.
std::string certificate_text(const Certificate& c);

/// Parses and validates a document: schema, ring, matrix shapes, digest.
/// Throws Error("parse-error"/"digest-mismatch"/...) on malformed input.
Certificate parse_certificate(const std::string& text);

/// Rebuilds the verifiable decomposition: ambient algebra from the header,
/// generator coordinates from the matrices. Throws
/// Error("generator-not-in-algebra") when a matrix lies outside the algebra.
Decomposition to_decomposition(const Certificate& c);

}  // namespace odac
