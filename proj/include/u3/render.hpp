#pragma once

#include <string>

#include "u3/canonical_cgc.hpp"
#include "u3/json.hpp"
#include "u3/physical.hpp"
#include "u3/recoupling.hpp"
#include "u3/wigner.hpp"

namespace u3 {

// Renderers shared by the command-line tool and the determinism checks.
// Every renderer is a pure function of its arguments, and the JSON form
// always serializes to the same bytes for the same inputs: documents are
// {"kind": ..., "labels": {...}, "entries": [...]} with sorted keys,
// deterministic entry order and %.17g floating-point formatting.

Json render_dim_json(const U3Irrep& g);
Json render_dim_json(const SU3Irrep& s);
Json render_enumerate_json(const U3Irrep& g);
Json render_decompose_json(const U3Irrep& g1, const U3Irrep& g2);
Json render_cgc_json(const CGTable& t);
Json render_ucoef_json(const UTensor& t);
Json render_zcoef_json(const ZTensor& t);
Json render_nine_json(const NineU3& t);
Json render_content_json(const SU3Irrep& s);
Json render_transform_json(const So3Transform& t);
Json render_wigner_json(const WignerTable& t);

std::string render_dim_text(const U3Irrep& g);
std::string render_dim_text(const SU3Irrep& s);
std::string render_enumerate_text(const U3Irrep& g);
std::string render_decompose_text(const U3Irrep& g1, const U3Irrep& g2);
std::string render_cgc_text(const CGTable& t);
std::string render_ucoef_text(const UTensor& t);
std::string render_zcoef_text(const ZTensor& t);
std::string render_nine_text(const NineU3& t);
std::string render_content_text(const SU3Irrep& s);
std::string render_transform_text(const So3Transform& t);
std::string render_wigner_text(const WignerTable& t);

} // namespace u3
