#pragma once

// Umbrella header pulling in the whole library.

#include "arthur.hpp"
#include "cli.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "ext_indices.hpp"
#include "involution.hpp"
#include "json_io.hpp"
#include "models.hpp"
#include "rational.hpp"
#include "recursion.hpp"
#include "relevance.hpp"
#include "segments.hpp"
#include "speh.hpp"
#include "symbols.hpp"
#include "text.hpp"
#include "verify.hpp"
#include "weak_relevance.hpp"
