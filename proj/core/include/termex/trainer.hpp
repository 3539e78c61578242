#pragma once

#include "termex/corpus.hpp"
#include "termex/model.hpp"

namespace termex {

// Trains subword skip-gram vectors with negative sampling on a tokenized
// corpus. The learning rate decays linearly to zero over epochs x tokens.
// With config.threads <= 1 the run is deterministic for a fixed rng_seed;
// more threads train hogwild-style with unsynchronized updates.
// Throws DataError when the corpus yields an empty vocabulary.
EmbeddingModel train(const Corpus& corpus, const TrainConfig& config);

}  // namespace termex
