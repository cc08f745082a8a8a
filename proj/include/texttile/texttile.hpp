#pragma once

#include "texttile/boundary_detect.hpp"
#include "texttile/errors.hpp"
#include "texttile/eval_harness.hpp"
#include "texttile/lexical_scoring.hpp"
#include "texttile/pipeline.hpp"
#include "texttile/stemmer.hpp"
#include "texttile/stopwords.hpp"
#include "texttile/text_ingest.hpp"
