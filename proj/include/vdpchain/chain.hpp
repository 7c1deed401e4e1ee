#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "vdpchain/identity.hpp"
#include "vdpchain/puzzle.hpp"

namespace vdpchain::chain {

using Tokens = std::int64_t;
using BlockDigest = Bytes;  // 32 bytes

// abstraction over the crypto the validation pipeline consults; the real
// implementation wraps identity + puzzle, the simulator substitutes a
// statistical suite in fast mode
class CryptoSuite {
  public:
    virtual ~CryptoSuite() = default;

    virtual identity::VrfResult vrf_eval(ByteSpan secret_key, ByteSpan seed) const = 0;
    virtual bool vrf_verify(ByteSpan public_key, ByteSpan seed,
                            const identity::VrfResult& result) const = 0;
    virtual Bytes sign(ByteSpan secret_key, ByteSpan message) const = 0;
    virtual bool verify_sig(ByteSpan public_key, ByteSpan message, ByteSpan signature) const = 0;

    // solution fields travel as wire bytes inside headers
    virtual puzzle::SolutionVerdict verify_solution(ByteSpan input_r, std::uint64_t t,
                                                    ByteSpan d_bytes, ByteSpan proof_bytes) const = 0;
    virtual Bytes genesis_element(ByteSpan config_digest) const = 0;
};

class RealCryptoSuite final : public CryptoSuite {
  public:
    explicit RealCryptoSuite(puzzle::PuzzleParams params) : params_(std::move(params)) {}

    const puzzle::PuzzleParams& params() const { return params_; }

    identity::VrfResult vrf_eval(ByteSpan secret_key, ByteSpan seed) const override;
    bool vrf_verify(ByteSpan public_key, ByteSpan seed,
                    const identity::VrfResult& result) const override;
    Bytes sign(ByteSpan secret_key, ByteSpan message) const override;
    bool verify_sig(ByteSpan public_key, ByteSpan message, ByteSpan signature) const override;
    puzzle::SolutionVerdict verify_solution(ByteSpan input_r, std::uint64_t t, ByteSpan d_bytes,
                                            ByteSpan proof_bytes) const override;
    Bytes genesis_element(ByteSpan config_digest) const override;

  private:
    puzzle::PuzzleParams params_;
};

struct ChainConfig {
    std::uint32_t kappa_con = 6;
    Tokens stake_amount = 1000;
    std::uint32_t lock_blocks = 100;
    Tokens block_reward = 100;
    std::uint32_t epsilon_num = 1;   // epsilon = epsilon_num / epsilon_den, 0 < eps << 1
    std::uint32_t epsilon_den = 100;

    void validate() const;
    Tokens submitter_reward() const;  // floor(epsilon * R)
    Tokens multi_fork_penalty() const;  // R + submitter_reward burn
    Bytes config_digest() const;
};

struct BlockHeader {
    std::uint64_t height = 0;
    BlockDigest parent_hash;     // 32 bytes
    Bytes proposer_pk;
    Bytes vrf_r;
    Bytes vrf_proof;
    std::uint64_t puzzle_t = 0;
    Bytes puzzle_d;              // canonical group-element bytes
    Bytes puzzle_proof;          // pi canonical bytes || ell minimal BE
    Digest tx_merkle_root{};
    Bytes signature;

    Bytes signed_bytes() const;  // every field above except the signature, length-prefixed
    BlockDigest digest() const;  // 256-bit hash of signed_bytes
};

enum class TxKind : std::uint8_t { transfer = 1, stake = 2, unstake = 3, slash = 4 };

enum class EvidenceKind : std::uint8_t { same_parent_double_propose = 1, multi_fork_block = 2 };

struct SlashingEvidence {
    EvidenceKind kind = EvidenceKind::same_parent_double_propose;
    Bytes offender_pk;
    std::vector<BlockHeader> block_refs;  // two conflicting signed headers
    Bytes submitter_pk;

    Bytes encode() const;
};

struct Transaction {
    TxKind kind = TxKind::transfer;
    Bytes from;
    Bytes to;
    Tokens amount = 0;
    std::optional<SlashingEvidence> evidence;

    Bytes encode() const;
};

struct Block {
    BlockHeader header;
    std::vector<Transaction> transactions;
};

Digest merkle_root(const std::vector<Transaction>& txs);
extern const Digest kEmptyMerkleRoot;

struct Account {
    Tokens balance = 0;
    Tokens staked = 0;
    std::int64_t staked_at_height = -1;
    Tokens slashed_total = 0;
};

struct SlashReceipt {
    Tokens burned = 0;
    Tokens minted_to_submitter = 0;
    std::vector<BlockDigest> penalized_refs;
};

class StakeLedger {
  public:
    void bootstrap(const Bytes& pk, Tokens balance);  // pre-consensus funding only

    const Account* find(const Bytes& pk) const;
    bool is_active_validator(const Bytes& pk, Tokens stake_amount) const;
    std::vector<Bytes> validator_set() const;

    bool transfer(const Bytes& from, const Bytes& to, Tokens amount);
    bool stake(const Bytes& pk, std::uint64_t height, const ChainConfig& config);
    enum class UnstakeResult { ok, locked, not_staked };
    UnstakeResult unstake(const Bytes& pk, std::uint64_t height, const ChainConfig& config);

    void mint(const Bytes& pk, Tokens amount);
    bool reward_block(const BlockDigest& digest, const Bytes& proposer, const ChainConfig& config);
    bool block_rewarded(const BlockDigest& digest) const;

    // supply accounting: sum(balance + staked) == initial + minted - burned
    bool conservation_holds() const;
    Tokens total_supply() const;
    Tokens minted_total() const { return minted_; }
    Tokens burned_total() const { return burned_; }

    bool same_parent_applied(const Bytes& offender) const;
    bool multi_fork_applied(const Bytes& offender, const BlockDigest& ref) const;
    void record_same_parent(const Bytes& offender);
    void record_multi_fork(const Bytes& offender, const BlockDigest& ref);
    Tokens burn_stake(const Bytes& pk, Tokens amount);  // returns amount actually burned

    std::map<Bytes, Account>& accounts() { return accounts_; }
    const std::map<Bytes, Account>& accounts() const { return accounts_; }

  private:
    std::map<Bytes, Account> accounts_;
    Tokens initial_ = 0;
    Tokens minted_ = 0;
    Tokens burned_ = 0;
    std::set<Bytes> same_parent_applied_;
    std::set<std::pair<Bytes, BlockDigest>> multi_fork_applied_;
    std::set<BlockDigest> rewarded_;
};

enum class ValidationReason {
    ok,
    parent_missing,
    bad_height,
    proposer_not_validator,
    vrf_invalid,
    solution_invalid,
    signature_invalid,
    merkle_mismatch,
    tx_invalid,
};

const char* reason_name(ValidationReason r);

enum class InsertOutcome { extended_tip, new_tip_switch, side_branch, duplicate };

class BlockTree {
  public:
    BlockTree(Block genesis, StakeLedger genesis_ledger, ChainConfig config,
              std::shared_ptr<const CryptoSuite> suite);

    const ChainConfig& config() const { return config_; }
    const CryptoSuite& suite() const { return *suite_; }

    bool contains(const BlockDigest& digest) const;
    const Block* block(const BlockDigest& digest) const;
    std::uint64_t height_of(const BlockDigest& digest) const;

    const Block& tip() const;
    BlockDigest tip_digest() const;
    std::uint64_t tip_height() const;
    const Block& genesis() const;

    ValidationReason validate_block(const Block& block) const;
    InsertOutcome insert_block(const Block& block);  // caller must have validated

    std::vector<const Block*> longest_chain() const;
    std::vector<const Block*> confirmed_prefix() const;

    // evidence for conflicts between `digest`'s block and earlier blocks by the
    // same proposer; call right after insert_block
    std::vector<SlashingEvidence> detect_equivocation(const BlockDigest& digest) const;

    bool is_ancestor(const BlockDigest& ancestor, const BlockDigest& descendant) const;
    bool conflicting(const BlockDigest& a, const BlockDigest& b) const;
    BlockDigest lowest_common_ancestor(const BlockDigest& a, const BlockDigest& b) const;

    // branch ledger state resulting from the block (rebuilds from the nearest snapshot)
    std::shared_ptr<const StakeLedger> ledger_at(const BlockDigest& digest) const;

    std::size_t size() const { return nodes_.size(); }

  private:
    struct Node {
        Block block;
        BlockDigest digest;
        std::uint32_t parent = 0;
        std::uint64_t height = 0;
        std::uint64_t arrival = 0;
        std::vector<std::uint32_t> jumps;  // binary-lifting ancestor pointers
    };

    struct ProposerInfo {
        std::vector<std::uint32_t> blocks;
        bool chain_consistent = true;  // all known blocks totally ordered by ancestry
        std::uint32_t latest = 0;
    };

    std::uint32_t index_of(const BlockDigest& digest) const;
    std::uint32_t ancestor_at(std::uint32_t node, std::uint64_t height) const;
    std::shared_ptr<const StakeLedger> compute_ledger(std::uint32_t idx) const;
    void apply_block(StakeLedger& ledger, std::uint32_t idx) const;
    bool tx_valid(const Transaction& tx, const StakeLedger& ledger, std::uint64_t height) const;
    bool apply_tx(StakeLedger& ledger, const Transaction& tx, std::uint32_t block_idx) const;
    bool evidence_valid(const SlashingEvidence& ev) const;

    std::vector<Node> nodes_;
    std::unordered_map<std::string, std::uint32_t> index_;  // digest hex -> node
    std::unordered_map<std::string, ProposerInfo> proposers_;
    std::uint32_t tip_ = 0;
    std::uint64_t arrivals_ = 0;
    ChainConfig config_;
    std::shared_ptr<const CryptoSuite> suite_;

    mutable std::unordered_map<std::uint32_t, std::shared_ptr<const StakeLedger>> ledger_cache_;
    static constexpr std::uint32_t kLedgerCheckpointInterval = 64;
};

// (instance input, vrf result) for extending `parent`; depends only on
// (sk, parent puzzle_d) so transaction content cannot be ground
std::pair<Bytes, identity::VrfResult> derive_instance(ByteSpan secret_key, const Block& parent,
                                                      const CryptoSuite& suite);

struct SolutionWire {
    std::uint64_t t = 0;
    Bytes d_bytes;
    Bytes proof_bytes;
};

Block assemble_block(const identity::KeyPair& keypair, const Block& parent,
                     std::vector<Transaction> txs, const SolutionWire& solution,
                     const identity::VrfResult& vrf, const CryptoSuite& suite);

// apply_slashing against an explicit branch-membership predicate;
// BlockTree wires this into slash-transaction execution
template <typename OnBranchFn>
std::optional<SlashReceipt> apply_slashing(StakeLedger& ledger, const SlashingEvidence& evidence,
                                           const ChainConfig& config, OnBranchFn&& on_branch);

void credit_rewards(StakeLedger& ledger, const std::vector<const Block*>& confirmed,
                    const ChainConfig& config);

Block make_genesis(const ChainConfig& config, const CryptoSuite& suite);

nlohmann::json ledger_to_json(const StakeLedger& ledger);

// --- template implementation ---

template <typename OnBranchFn>
std::optional<SlashReceipt> apply_slashing(StakeLedger& ledger, const SlashingEvidence& evidence,
                                           const ChainConfig& config, OnBranchFn&& on_branch) {
    SlashReceipt receipt;
    if (evidence.kind == EvidenceKind::same_parent_double_propose) {
        if (ledger.same_parent_applied(evidence.offender_pk)) return std::nullopt;
        const Account* acct = ledger.find(evidence.offender_pk);
        if (!acct || acct->staked <= 0) return std::nullopt;
        receipt.burned = ledger.burn_stake(evidence.offender_pk, acct->staked);
        ledger.record_same_parent(evidence.offender_pk);
        for (const BlockHeader& h : evidence.block_refs) receipt.penalized_refs.push_back(h.digest());
        return receipt;
    }
    // multi-fork: burn (1+eps)R per off-branch block, once per (offender, block)
    bool applied = false;
    for (const BlockHeader& h : evidence.block_refs) {
        BlockDigest ref = h.digest();
        if (on_branch(ref)) continue;
        if (ledger.multi_fork_applied(evidence.offender_pk, ref)) continue;
        const Account* acct = ledger.find(evidence.offender_pk);
        if (!acct || acct->staked <= 0) continue;
        Tokens burned = ledger.burn_stake(evidence.offender_pk, config.multi_fork_penalty());
        ledger.record_multi_fork(evidence.offender_pk, ref);
        ledger.mint(evidence.submitter_pk, config.submitter_reward());
        receipt.burned += burned;
        receipt.minted_to_submitter += config.submitter_reward();
        receipt.penalized_refs.push_back(ref);
        applied = true;
    }
    if (!applied) return std::nullopt;
    return receipt;
}

}  // namespace vdpchain::chain
