#pragma once

#include "geomseq/errors.hpp"
#include "geomseq/geonum.hpp"
#include "geomseq/sequence.hpp"
#include "geomseq/expr.hpp"
#include "geomseq/generators.hpp"
#include "geomseq/io.hpp"
#include "geomseq/diff.hpp"
#include "geomseq/truncation.hpp"
#include "geomseq/convergence.hpp"
#include "geomseq/orlicz.hpp"
#include "geomseq/duals.hpp"
#include "geomseq/config.hpp"
#include "geomseq/report.hpp"
#include "geomseq/selftest.hpp"
