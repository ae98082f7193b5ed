#pragma once

// Unsupervised sentence boundary detection for caseless Persian-Arabic
// script text: corpus ingestion, tokenization, unsupervised training,
// segmentation, XML annotation I/O, and evaluation.

#include "sbd/corpus.hpp"
#include "sbd/counts.hpp"
#include "sbd/errors.hpp"
#include "sbd/evaluation.hpp"
#include "sbd/params.hpp"
#include "sbd/segmenter.hpp"
#include "sbd/tokenizer.hpp"
#include "sbd/trainer.hpp"
#include "sbd/unicode.hpp"
#include "sbd/xml.hpp"
