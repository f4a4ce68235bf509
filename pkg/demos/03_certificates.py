"""
Replayable distinctness certificates
====================================

Certificates record every step of an argument as (operation, arguments,
result) so they can be re-executed independently.
"""

from concordium import fixtures
from concordium.certify import (
    certificate_from_json,
    certify_distinct_iterates,
    certify_not_topologically_hopf,
    certify_qi_vs_ckrs,
    render_text,
    roberts_interval,
    verify_certificate,
)

# Every CKRS link l_J satisfies -2 <= tau(L_J(RHT)) <= 4, whatever J is.
print("CKRS range:", roberts_interval(fixtures.ckrs_pattern(), fixtures.TAU_RHT))

# For i <= 3 the ranges overlap and nothing is claimed.
for i in (3, 4):
    cert = certify_qi_vs_ckrs(i)
    print(f"\n--- Q^{i} versus CKRS ---")
    print(render_text(cert))

# Serialize, reload and replay.
blob = certify_qi_vs_ckrs(6).dumps()
print("\nreplay after round trip:", verify_certificate(certificate_from_json(blob)))

print("\n--- iterates of Q ---")
print(render_text(certify_distinct_iterates()))

print("\n--- Wh2 variant ---")
print(render_text(certify_not_topologically_hopf(fixtures.wh2_poly())))
