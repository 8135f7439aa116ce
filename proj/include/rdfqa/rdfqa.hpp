// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rdfqa/contaminate.hpp"
#include "rdfqa/dataset.hpp"
#include "rdfqa/dictionary.hpp"
#include "rdfqa/error.hpp"
#include "rdfqa/instance_index.hpp"
#include "rdfqa/metrics.hpp"
#include "rdfqa/ntriples.hpp"
#include "rdfqa/reader.hpp"
#include "rdfqa/report_io.hpp"
#include "rdfqa/rng.hpp"
#include "rdfqa/schema_index.hpp"
#include "rdfqa/stats.hpp"
#include "rdfqa/term.hpp"
#include "rdfqa/version.hpp"
#include "rdfqa/vocabulary.hpp"
#include "rdfqa/xsd.hpp"
