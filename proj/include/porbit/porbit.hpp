/// Umbrella header: partition orbit analysis for cluster ensembles.
///
/// Partitions of m points into at most ell clusters are points of an orbit
/// space (membership matrices modulo row permutation). This library computes
/// the intrinsic metric between them, degrees of asymmetry, alpha-homogeneity
/// with outlier identification, mean and medoid partitions, and
/// cluster-stability scores, plus the k-means ensemble machinery to drive it.

#pragma once

#include "porbit/asymmetry.hpp"
#include "porbit/assignment.hpp"
#include "porbit/dataset.hpp"
#include "porbit/ensemble.hpp"
#include "porbit/errors.hpp"
#include "porbit/experiment.hpp"
#include "porbit/frechet.hpp"
#include "porbit/homogeneity.hpp"
#include "porbit/kmeans.hpp"
#include "porbit/metric.hpp"
#include "porbit/partition.hpp"
#include "porbit/rng.hpp"
#include "porbit/serialize.hpp"
