#pragma once

namespace lambdaphase {

/// Coherent-state amplitude Q_n = sqrt(exp(-nbar) nbar^n / n!), evaluated in
/// log space. Q_n = 0 for n < 0 is not accepted here; callers that index
/// below zero handle that themselves. Throws std::invalid_argument for
/// nbar < 0 or n < 0.
double poisson_weight(double nbar, int n);

/// Smallest N with sum_{n<=N} Q_n^2 >= 1 - epsilon. Requires nbar >= 0 and
/// 0 < epsilon < 1.
int truncation_cutoff(double nbar, double epsilon);

}  // namespace lambdaphase
