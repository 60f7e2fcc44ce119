#pragma once

// Unsupervised breath-phase segmentation: short-time-energy triangle
// modeling solved by dynamic programming, with spectral phase-count
// estimation, evaluation metrics, a noise bench, and a synthetic oracle.

#include "breathseg/audio.hpp"
#include "breathseg/corpus.hpp"
#include "breathseg/energy.hpp"
#include "breathseg/errors.hpp"
#include "breathseg/fft.hpp"
#include "breathseg/filter.hpp"
#include "breathseg/labels.hpp"
#include "breathseg/metrics.hpp"
#include "breathseg/noise.hpp"
#include "breathseg/pipeline.hpp"
#include "breathseg/rate.hpp"
#include "breathseg/report.hpp"
#include "breathseg/rng.hpp"
#include "breathseg/segmenter.hpp"
#include "breathseg/sweep.hpp"
#include "breathseg/synth.hpp"
#include "breathseg/triangle.hpp"
#include "breathseg/wav.hpp"
