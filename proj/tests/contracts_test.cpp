// eventwarden: event-driven transaction proxy simulator
// Copyright 2026 The eventwarden Authors.
// SPDX-License-Identifier: Apache-2.0
#include <warden/contracts.hpp>

#include <warden/chain.hpp>
#include <warden/keccak.hpp>

#include <gtest/gtest.h>

using namespace warden;

namespace {

Address addr(uint8_t tag) {
    Address a;
    a.bytes.fill(tag);
    return a;
}

const Address kUser = addr(0x11);
const Address kExecutor = addr(0x22);
const Address kRecipient = addr(0x33);
const Address kHub = addr(0x44);
const Address kEmitter = addr(0x55);
const Address kOtherEmitter = addr(0x56);
const Address kSentinel = addr(0x66);
const Address kReverterC = addr(0x77);

constexpr uint64_t kFee = 100'000;
constexpr uint64_t kEtValue = 12'345;
constexpr uint64_t kUserFunds = 50'000'000;
constexpr uint64_t kExecutorFunds = 10'000'000;

Bytes bytes_of(std::string_view s) {
    return Bytes{s.begin(), s.end()};
}

struct ContractsFixture : ::testing::Test {
    LogEntry prescribed{kEmitter, {keccak256("KittySale(string)")}, bytes_of("rare-blue")};

    Chain chain = [] {
        HandlerRegistry registry;
        install_warden_handlers(registry);
        install_scenario_handlers(registry);

        State genesis;
        genesis[kUser] = {kUserFunds, 0, std::nullopt};
        genesis[kExecutor] = {kExecutorFunds, 0, std::nullopt};
        genesis[kRecipient] = {0, 0, std::nullopt};
        genesis[kHub] = {0, 0, ContractState{std::string{kHubHandler}, {}}};
        genesis[kEmitter] = {0, 0, ContractState{std::string{kEventEmitterHandler}, {}}};
        genesis[kOtherEmitter] = {0, 0, ContractState{std::string{kEventEmitterHandler}, {}}};
        genesis[kSentinel] = {0, 0, ContractState{std::string{kSentinelHandler}, {}}};
        genesis[kReverterC] = {0, 0, ContractState{std::string{kReverterHandler}, {}}};
        return Chain{Vm{std::move(registry), GasSchedule{}}, ChainConfig{}, std::move(genesis)};
    }();

    Address proxy;

    ProxyConfig fund_transfer_config() {
        return {kFee, kEmitter, log_commitment(prescribed),
            {ReservedKind::FundTransfer, kRecipient, kEtValue, {}}};
    }

    Receipt run(const Transaction& tx) {
        const Block& block = chain.append_block({tx});
        if (block.receipts.empty())
            throw std::runtime_error{"transaction was dropped"};
        return block.receipts.back();
    }

    Receipt deploy(const ProxyConfig& config) {
        proxy = derive_address(kUser, chain.state().at(kUser).nonce);
        return run({kUser, std::nullopt, 0, encode_proxy_creation(config), 1'000'000});
    }

    Receipt charge(uint64_t amount = kFee + kEtValue, const Address& from = kUser) {
        return run({from, proxy, amount, encode_charge_call(), 200'000});
    }

    Receipt register_service() {
        return run({kUser, kHub, 0, encode_new_service_call(proxy), 200'000});
    }

    uint64_t emit_event(const LogEntry& entry) {
        run({kUser, entry.emitter, 0, encode_emit_log_call(entry.topics, entry.data),
            200'000});
        return chain.head().header.number;
    }

    ProofBundle bundle_for(uint64_t block_number, uint64_t receipt_index = 0,
        uint64_t log_index = 0) {
        const Block& block = chain.get_block(block_number);
        const auto* receipt_trie = chain.receipt_trie(block_number);
        if (receipt_trie == nullptr)
            throw std::runtime_error{"block has no receipts"};
        return {block_number, encode_header(block.header),
            receipt_trie->prove(receipt_index), receipt_index, log_index};
    }

    Receipt verify(const ProofBundle& bundle, const Address& caller = kExecutor) {
        return run({caller, proxy, 0, encode_event_verify_call(bundle), 500'000});
    }

    Receipt close(const Address& caller = kUser) {
        return run({caller, proxy, 0, encode_close_call(), 200'000});
    }

    ProxyState proxy_state() { return read_proxy_state(chain.state(), proxy); }
    uint64_t balance(const Address& a) {
        const auto it = chain.state().find(a);
        return it == chain.state().end() ? 0 : it->second.balance;
    }
    uint64_t total_wealth() {
        uint64_t sum = 0;
        for (const auto& [a, acct] : chain.state())
            sum += acct.balance;
        return sum;
    }
    uint64_t total_burned() {
        uint64_t sum = 0;
        for (uint64_t n = 1; n <= chain.head().header.number; ++n)
            for (const Receipt& r : chain.get_block(n).receipts)
                sum += r.gas_used;
        return sum;
    }
};

}  // namespace

TEST_F(ContractsFixture, full_lifecycle_releases_fund_transfer)
{
    const uint64_t initial_wealth = total_wealth();

    ASSERT_EQ(deploy(fund_transfer_config()).status, 1u);
    EXPECT_EQ(proxy_state(), ProxyState::Deployed);
    const ProxyView view = read_proxy(chain.state(), proxy);
    EXPECT_EQ(view.owner, kUser);
    EXPECT_EQ(view.config, fund_transfer_config());

    ASSERT_EQ(charge().status, 1u);
    EXPECT_EQ(proxy_state(), ProxyState::Funded);
    EXPECT_EQ(balance(proxy), kFee + kEtValue);

    const Receipt reg = register_service();
    ASSERT_EQ(reg.status, 1u);
    EXPECT_EQ(proxy_state(), ProxyState::Registered);
    ASSERT_EQ(reg.logs.size(), 1u);
    EXPECT_EQ(reg.logs[0].emitter, kHub);
    EXPECT_EQ(reg.logs[0].topics.at(0), keccak256(kSigNewServiceLog));
    EXPECT_EQ(reg.logs[0].data, rlp::encode_bytes(ByteView{proxy.bytes}));
    EXPECT_EQ(read_hub_registry(chain.state(), kHub), std::vector<Address>{proxy});

    const uint64_t event_block = emit_event(prescribed);
    const uint64_t executor_before = balance(kExecutor);

    const Receipt fired = verify(bundle_for(event_block));
    ASSERT_EQ(fired.status, 1u);
    EXPECT_EQ(proxy_state(), ProxyState::Triggered);
    EXPECT_EQ(balance(kRecipient), kEtValue);
    EXPECT_EQ(balance(proxy), 0u);
    EXPECT_EQ(balance(kExecutor), executor_before + kFee - fired.gas_used);

    EXPECT_EQ(total_wealth() + total_burned(), initial_wealth);
}

TEST_F(ContractsFixture, charge_below_requirement_bounces)
{
    deploy(fund_transfer_config());
    const uint64_t user_before = balance(kUser);
    const Receipt r = charge(kFee + kEtValue - 1);
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kInsufficientFunding);
    EXPECT_EQ(proxy_state(), ProxyState::Deployed);
    EXPECT_EQ(balance(proxy), 0u);
    EXPECT_EQ(balance(kUser), user_before - r.gas_used);
}

TEST_F(ContractsFixture, charge_twice_hits_wrong_state)
{
    deploy(fund_transfer_config());
    charge();
    const Receipt r = charge();
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kWrongState);
    EXPECT_EQ(balance(proxy), kFee + kEtValue);
}

TEST_F(ContractsFixture, charge_above_requirement_is_accepted)
{
    deploy(fund_transfer_config());
    const Receipt r = charge(kFee + kEtValue + 500);
    EXPECT_EQ(r.status, 1u);
    EXPECT_EQ(read_proxy(chain.state(), proxy).funded_amount, kFee + kEtValue + 500);
}

TEST_F(ContractsFixture, register_unfunded_proxy_fails)
{
    deploy(fund_transfer_config());
    const Receipt r = register_service();
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kWrongState);
    EXPECT_EQ(proxy_state(), ProxyState::Deployed);
    EXPECT_TRUE(read_hub_registry(chain.state(), kHub).empty());
    EXPECT_TRUE(r.logs.empty());
}

TEST_F(ContractsFixture, double_register_fails)
{
    deploy(fund_transfer_config());
    charge();
    register_service();
    const Receipt r = register_service();
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kAlreadyRegistered);
    EXPECT_EQ(read_hub_registry(chain.state(), kHub).size(), 1u);
}

TEST_F(ContractsFixture, event_verify_requires_registered_state)
{
    deploy(fund_transfer_config());
    charge();
    const uint64_t event_block = emit_event(prescribed);
    const Receipt r = verify(bundle_for(event_block));
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kWrongState);
}

TEST_F(ContractsFixture, event_verify_rejects_out_of_window_block)
{
    deploy(fund_transfer_config());
    charge();
    register_service();
    const uint64_t event_block = emit_event(prescribed);

    ProofBundle bundle = bundle_for(event_block);
    bundle.block_number = chain.head().header.number + 5;  // not yet mined
    const Receipt r = verify(bundle);
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kBlockOutOfWindow);
    EXPECT_EQ(proxy_state(), ProxyState::Registered);
}

TEST_F(ContractsFixture, event_verify_rejects_corrupted_header)
{
    deploy(fund_transfer_config());
    charge();
    register_service();
    const uint64_t event_block = emit_event(prescribed);

    ProofBundle bundle = bundle_for(event_block);
    bundle.block_data[10] ^= 0x01;
    const Receipt r = verify(bundle);
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kBlockMismatch);
}

TEST_F(ContractsFixture, event_verify_rejects_mutated_proof)
{
    deploy(fund_transfer_config());
    charge();
    register_service();
    const uint64_t event_block = emit_event(prescribed);

    ProofBundle bundle = bundle_for(event_block);
    bundle.proof.nodes.back()[3] ^= 0x40;
    const Receipt r = verify(bundle);
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kProofInvalid);
    EXPECT_EQ(proxy_state(), ProxyState::Registered);
}

TEST_F(ContractsFixture, event_verify_rejects_wrong_log)
{
    deploy(fund_transfer_config());
    charge();
    register_service();

    // A decoy from the right emitter with the wrong payload, and the exact
    // payload from the wrong emitter.
    const LogEntry decoy{kEmitter, prescribed.topics, bytes_of("dull-gray")};
    const uint64_t decoy_block = emit_event(decoy);
    const LogEntry imposter{kOtherEmitter, prescribed.topics, prescribed.data};
    const uint64_t imposter_block = emit_event(imposter);

    Receipt r = verify(bundle_for(decoy_block));
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kLogMismatch);

    r = verify(bundle_for(imposter_block));
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kLogMismatch);

    // Right event, out-of-range log index.
    const uint64_t event_block = emit_event(prescribed);
    r = verify(bundle_for(event_block, 0, 7));
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kLogMismatch);

    EXPECT_EQ(proxy_state(), ProxyState::Registered);
}

TEST_F(ContractsFixture, replay_pays_exactly_once)
{
    deploy(fund_transfer_config());
    charge();
    register_service();
    const uint64_t event_block = emit_event(prescribed);
    const ProofBundle bundle = bundle_for(event_block);

    const uint64_t executor_before = balance(kExecutor);
    const Receipt first = verify(bundle);
    ASSERT_EQ(first.status, 1u);

    const Receipt second = verify(bundle);
    EXPECT_EQ(second.status, 0u);
    EXPECT_EQ(second.revert_reason, reason::kWrongState);

    EXPECT_EQ(balance(kRecipient), kEtValue);
    EXPECT_EQ(balance(kExecutor),
        executor_before + kFee - first.gas_used - second.gas_used);
}

TEST_F(ContractsFixture, release_function_invocation_writes_sentinel)
{
    const Bytes payload = encode_call(kSigSetSentinel, {rlp::Item::bytes(bytes_of("ping"))});
    deploy({kFee, kEmitter, log_commitment(prescribed),
        {ReservedKind::FunctionInvocation, kSentinel, kEtValue, payload}});
    charge();
    register_service();
    const uint64_t event_block = emit_event(prescribed);

    ASSERT_EQ(verify(bundle_for(event_block)).status, 1u);
    EXPECT_EQ(proxy_state(), ProxyState::Triggered);
    EXPECT_EQ(chain.state().at(kSentinel).contract->storage.at(bytes_of("sentinel")),
        bytes_of("ping"));
    EXPECT_EQ(balance(kSentinel), kEtValue);
}

TEST_F(ContractsFixture, release_contract_creation_lands_at_derived_address)
{
    const Bytes payload = encode_creation(kSentinelHandler, bytes_of("born"));
    deploy({kFee, kEmitter, log_commitment(prescribed),
        {ReservedKind::ContractCreation, std::nullopt, 0, payload}});
    charge(kFee);
    register_service();
    const uint64_t event_block = emit_event(prescribed);

    // The proxy has created nothing yet, so the release must create at its
    // nonce-0 derived address.
    const Address expected = derive_address(proxy, 0);
    ASSERT_EQ(verify(bundle_for(event_block)).status, 1u);
    ASSERT_TRUE(chain.state().contains(expected));
    EXPECT_TRUE(chain.state().at(expected).is_contract());
    EXPECT_EQ(chain.state().at(expected).contract->storage.at(bytes_of("init")),
        bytes_of("born"));
}

TEST_F(ContractsFixture, release_target_failure_still_triggers_and_pays)
{
    const Bytes payload = encode_call("anything()", {});
    deploy({kFee, kEmitter, log_commitment(prescribed),
        {ReservedKind::FunctionInvocation, kReverterC, kEtValue, payload}});
    charge();
    register_service();
    const uint64_t event_block = emit_event(prescribed);

    const uint64_t executor_before = balance(kExecutor);
    const Receipt fired = verify(bundle_for(event_block));
    ASSERT_EQ(fired.status, 1u);
    EXPECT_EQ(proxy_state(), ProxyState::Triggered);
    EXPECT_EQ(balance(kExecutor), executor_before + kFee - fired.gas_used);
    // The failed release leaves the reserved ether with the proxy.
    EXPECT_EQ(balance(proxy), kEtValue);
    EXPECT_TRUE(chain.state().at(kReverterC).contract->storage.empty());
}

TEST_F(ContractsFixture, close_refunds_owner_in_full)
{
    const uint64_t initial_wealth = total_wealth();
    deploy(fund_transfer_config());
    charge();
    register_service();

    const uint64_t user_before = balance(kUser);
    const Receipt r = close();
    ASSERT_EQ(r.status, 1u);
    EXPECT_EQ(proxy_state(), ProxyState::Closed);
    EXPECT_EQ(balance(proxy), 0u);
    EXPECT_EQ(balance(kUser), user_before + kFee + kEtValue - r.gas_used);
    EXPECT_EQ(total_wealth() + total_burned(), initial_wealth);
}

TEST_F(ContractsFixture, close_rejects_non_owner)
{
    deploy(fund_transfer_config());
    charge();
    const Receipt r = close(kExecutor);
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kNotOwner);
    EXPECT_EQ(proxy_state(), ProxyState::Funded);
}

TEST_F(ContractsFixture, close_respects_terminal_states)
{
    deploy(fund_transfer_config());
    Receipt r = close();
    EXPECT_EQ(r.status, 0u);  // Deployed holds no funds to refund
    EXPECT_EQ(r.revert_reason, reason::kWrongState);

    charge();
    register_service();
    const uint64_t event_block = emit_event(prescribed);
    ASSERT_EQ(verify(bundle_for(event_block)).status, 1u);

    r = close();
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kWrongState);
    EXPECT_EQ(proxy_state(), ProxyState::Triggered);
}

TEST_F(ContractsFixture, charge_after_close_fails)
{
    deploy(fund_transfer_config());
    charge();
    close();
    const Receipt r = charge();
    EXPECT_EQ(r.status, 0u);
    EXPECT_EQ(r.revert_reason, reason::kWrongState);
}

TEST_F(ContractsFixture, malformed_reservation_rejected_at_deploy)
{
    // Fund transfer without a recipient.
    const Receipt r = deploy({kFee, kEmitter, log_commitment(prescribed),
        {ReservedKind::FundTransfer, std::nullopt, kEtValue, {}}});
    EXPECT_EQ(r.status, 0u);
    EXPECT_FALSE(chain.state().contains(proxy));
}
