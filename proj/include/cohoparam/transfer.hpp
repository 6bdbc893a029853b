#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cohoparam/params.hpp"
#include "cohoparam/rootdata.hpp"

namespace cohoparam {

enum class Embedding {
  SpGL,           // Sp(2n) in GL(2n)
  SOGL,           // SO(2n+1) in GL(2n+1)
  SOOddInSOEven,  // SO(2n-1) in SO(2n)
  Diag,           // G in G x G
};

std::string to_string(Embedding e);
Embedding parse_embedding(std::string_view tag);

struct EmbeddingData {
  Embedding tag;
  int n = 0;
  RootDatum source;
  RootDatum target;
};

/// Dual data on both sides. For SOOddInSOEven the target is SO(2n) and disc
/// selects its quasi-split form; for Diag, n is the size of the GL factor.
EmbeddingData embedding_data(Embedding tag, int n, int disc = 0);

/// phi_* on cocharacters of the maximal tori.
HalfIntVector push_forward(Embedding tag, const HalfIntVector& v);

/// Throws MathCheckError unless phi_*(rho_check source) = rho_check target.
void check_rho_transport(const EmbeddingData& e);

HalfIntVector transfer_highest_weight(Embedding tag, const HalfIntVector& lambda);

struct TransferResult {
  Embedding tag;
  int n = 0;
  int disc = 0;
  GLParameter source;
  std::optional<GLParameter> target;        // GL- or SO-valued image
  std::optional<ComplexParameter> target_w;  // Diag: restriction to W_C
  HalfIntVector rho_source;
  HalfIntVector rho_target;
  bool rho_ok = false;
  bool source_cohomological = false;
  bool target_cohomological = false;

  std::string target_text() const;
};

/// Transfers p along the embedding. n = 0 infers the size from p. Throws
/// InputError when p is not valued in the source group and MathCheckError
/// when a cohomological source lands on a non-cohomological target.
TransferResult transfer_parameter(Embedding tag, const GLParameter& p, int n = 0, int disc = 0);

}  // namespace cohoparam
