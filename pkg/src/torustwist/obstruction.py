"""Candidate filter and top-level classifier for single-twist untying.

A non-exceptional T(p,q) with 0 < p < q that arises from the unknot by one
(n, w)-twist must have n = 1, and w is constrained by:

  * genus bound: (w-1)(w-2) <= (p-1)(q-1), which forces w < q;
  * parity bound: even w satisfy w > p;
  * divisibility: for every prime d | w,
        2[d/2](d-[d/2])/d^2 * w^2 = -sigma_d(T(p,q)) or 2 - sigma_d(T(p,q));
  * for odd w, the characteristic-sphere constraint of any applicable
    untwisting chain (see fourmanifold.kikuchi_eliminate).

The classifier enumerates w in [2, q-1] (w <= 1 cannot change the knot
type), applies the filters in that order, and emits a machine-checkable
certificate.  Exceptional and trivial knots are in the single-twist class
by construction and are reported as such; for everything else the verdict
is NotInT when no candidate survives, otherwise Undecided with the
surviving candidates listed.  Membership is never claimed for a
non-exceptional knot.
"""

import json
from dataclasses import dataclass, field

from .core import TorusKnotParams, is_exceptional, normalize
from .errors import DomainError, InternalCheckError, UndecidedSignError
from .fourmanifold import (kikuchi_eliminate, ledger_from_sequence,
                           serialize_sequence, template_sequences)
from .tristram import prime_divisors, sigma_d

SCHEMA = "torustwist-certificate/1"

TRIVIAL_OR_EXCEPTIONAL = "TrivialOrExceptional"
NOT_IN_T = "NotInT"
UNDECIDED = "Undecided"

REASON_GENUS = "genus-bound"
REASON_III = "condition-iii"
REASON_KIKUCHI = "kikuchi-no-square"
REASON_PARITY = "characteristic-parity"


def reason_iv(d: int) -> str:
    return f"condition-iv(d={d})"


@dataclass(frozen=True)
class CandidateTwist:
    n: int
    omega: int


@dataclass(frozen=True)
class Elimination:
    omega: int
    reason: str


@dataclass(frozen=True)
class TemplateReport:
    label: str
    sequence: str
    sigma_m: int
    b2_plus: int
    b2_minus: int
    xi_constant: int          # xi.xi = -w^2 + xi_constant
    applicable: bool
    omega_squared: int = None  # required w^2 when applicable
    admissible: tuple = ()
    note: str = ""


@dataclass
class ObstructionCertificate:
    knot: TorusKnotParams
    normalized: TorusKnotParams
    mirror: bool
    trivial: bool
    exceptional: bool
    verdict: str
    sigma_method: str
    eliminations: tuple = ()
    survivors: tuple = ()
    sigma_inputs: dict = field(default_factory=dict)
    templates: tuple = ()
    notes: tuple = ()


def thom_bound_check(p: int, q: int, omega: int) -> bool:
    """True iff (w-1)(w-2) <= (p-1)(q-1), the genus bound a single-twist
    candidate must satisfy."""
    if not 0 < p < q:
        raise DomainError(f"need 0 < p < q, got ({p},{q})")
    return (omega - 1) * (omega - 2) <= (p - 1) * (q - 1)


def condition_iv_check(p: int, q: int, omega: int, d: int,
                       sigma_value: int = None, method: str = "auto") -> bool:
    """Divisibility constraint at the prime d | w: the exact integer
    2[d/2](d-[d/2])w^2/d^2 must equal -sigma_d or 2 - sigma_d."""
    if omega % d != 0:
        raise DomainError(f"d={d} does not divide omega={omega}")
    a = d // 2
    num = 2 * a * (d - a) * omega * omega
    assert num % (d * d) == 0
    lhs = num // (d * d)
    if sigma_value is None:
        sigma_value = sigma_d(TorusKnotParams(p, q), d, method=method)
    return lhs == -sigma_value or lhs == 2 - sigma_value


def classify(k: TorusKnotParams, sigma_method: str = "auto",
             precision_cap: int = None, prime_cap: int = None,
             use_templates: bool = True) -> ObstructionCertificate:
    """Decide TrivialOrExceptional / NotInT / Undecided for one knot.

    sigma_method "auto" uses the integer counting fast path for the
    d-signatures (cross-validated against the certified Hermitian route by
    the test suite); "hermitian" forces the certified route.  prime_cap, if
    set, skips divisibility checks at primes above the cap: affected
    candidates are kept as survivors, never eliminated, so the verdict stays
    sound.
    """
    nk, mirror = normalize(k)
    notes = []
    if mirror:
        notes.append("input is the mirror of the normalized knot; the "
                     "analysis applies to the normalized form")
    trivial = nk.is_trivial
    exceptional = False if trivial else is_exceptional(nk)
    base = dict(knot=k, normalized=nk, mirror=mirror, trivial=trivial,
                exceptional=exceptional, sigma_method=sigma_method)
    if trivial or exceptional:
        notes.append("a full-strand twist on the unknot realizes this knot")
        return ObstructionCertificate(verdict=TRIVIAL_OR_EXCEPTIONAL,
                                      notes=tuple(notes), **base)

    p, q = nk.p, nk.q
    assert p >= 5 and q >= p + 2
    if thom_bound_check(p, q, q):
        raise InternalCheckError(f"genus bound fails to exclude w=q for {nk}")

    sigma_inputs = {}

    def sd(d):
        if d not in sigma_inputs:
            value = sigma_d(nk, d, method=sigma_method,
                            precision_cap=precision_cap)
            if value % 2 != 0:
                raise InternalCheckError(f"sigma_{d}({nk}) = {value} is odd")
            if value > -4:
                raise InternalCheckError(
                    f"sigma_{d}({nk}) = {value} violates the -4 bound")
            sigma_inputs[d] = value
        return sigma_inputs[d]

    eliminations = []
    alive = []
    for w in range(2, q):
        if not thom_bound_check(p, q, w):
            eliminations.append(Elimination(w, REASON_GENUS))
            continue
        if w % 2 == 0 and w <= p:
            eliminations.append(Elimination(w, REASON_III))
            continue
        failed = None
        capped = False
        for d in prime_divisors(w):
            if prime_cap is not None and d > prime_cap:
                capped = True
                continue
            try:
                ok = condition_iv_check(p, q, w, d, sigma_value=sd(d))
            except UndecidedSignError:
                notes.append(f"sigma_{d}({nk}) undecided at the precision "
                             f"cap; omega={w} kept as a survivor")
                capped = True
                continue
            if not ok:
                failed = d
                break
        if failed is not None:
            eliminations.append(Elimination(w, reason_iv(failed)))
        else:
            if capped:
                notes.append(f"omega={w}: some prime divisors exceeded the "
                             f"prime cap and were not checked")
            alive.append(w)

    template_reports = []
    if use_templates:
        for seq in template_sequences(nk):
            ledger = ledger_from_sequence(seq, symbolic_omega=True)
            res = kikuchi_eliminate(ledger)
            template_reports.append(TemplateReport(
                label=seq.label, sequence=serialize_sequence(seq),
                sigma_m=ledger.sigma_m, b2_plus=ledger.b2_plus,
                b2_minus=ledger.b2_minus,
                xi_constant=ledger.xi_self_intersection[0],
                applicable=res.applicable, omega_squared=res.omega_squared,
                admissible=res.admissible, note=res.reason))
            if not res.applicable:
                continue
            allowed = set(res.admissible)
            even_square_only = bool(res.admissible) and all(
                t % 2 == 0 for t in res.admissible)
            reason = REASON_PARITY if even_square_only else REASON_KIKUCHI
            for w in [w for w in alive if w % 2 == 1]:
                if w not in allowed:
                    eliminations.append(Elimination(w, reason))
                    alive.remove(w)

    survivors = tuple(CandidateTwist(1, w) for w in alive)
    covered = {e.omega for e in eliminations} | {s.omega for s in survivors}
    if covered != set(range(2, q)):
        raise InternalCheckError(f"candidate partition broken for {nk}")
    verdict = NOT_IN_T if not survivors else UNDECIDED
    return ObstructionCertificate(
        verdict=verdict, eliminations=tuple(sorted(eliminations,
                                                   key=lambda e: e.omega)),
        survivors=survivors, sigma_inputs=sigma_inputs,
        templates=tuple(template_reports), notes=tuple(notes), **base)


def survivors_p_plus_2(p: int, sigma_method: str = "auto"):
    """Surviving candidates for T(p, p+2), odd p >= 5."""
    if p < 5 or p % 2 == 0:
        raise DomainError(f"p={p}: need odd p >= 5")
    return list(classify(TorusKnotParams(p, p + 2),
                         sigma_method=sigma_method).survivors)


def survivors_p_plus_4(p: int, sigma_method: str = "auto"):
    """Surviving candidates for T(p, p+4), odd p = 5,7 (mod 8), p >= 7."""
    if p < 7 or p % 8 not in (5, 7):
        raise DomainError(f"p={p}: need p = 5 or 7 (mod 8), p >= 7")
    return list(classify(TorusKnotParams(p, p + 4),
                         sigma_method=sigma_method).survivors)


# ---------------------------------------------------------------------------
# certificate serialization
# ---------------------------------------------------------------------------


def certificate_to_text(cert: ObstructionCertificate) -> str:
    """Stable plain-text rendering (fixed field order, golden-file safe)."""
    out = [SCHEMA,
           f"knot: {cert.knot}",
           f"normalized: {cert.normalized}",
           f"mirror: {str(cert.mirror).lower()}",
           f"trivial: {str(cert.trivial).lower()}",
           f"exceptional: {str(cert.exceptional).lower()}",
           f"sigma-method: {cert.sigma_method}",
           f"verdict: {cert.verdict}"]
    if cert.verdict != TRIVIAL_OR_EXCEPTIONAL:
        q = cert.normalized.q
        out.append(f"candidates: omega in [2,{q - 1}] with n=1 "
                   "(omega <= 1 cannot change the knot type)")
        out.append("eliminated:")
        out.extend(f"  omega={e.omega}: {e.reason}" for e in cert.eliminations)
        out.append("survivors:")
        out.extend(f"  (n={s.n}, omega={s.omega})" for s in cert.survivors)
        out.append("sigma-inputs:")
        out.extend(f"  sigma_{d}({cert.normalized}) = {v}"
                   for d, v in sorted(cert.sigma_inputs.items()))
        out.append("templates:")
        for t in cert.templates:
            adm = ",".join(str(a) for a in t.admissible) or "none"
            if t.applicable:
                detail = f"omega^2 = {t.omega_squared}; admissible: {adm}"
            else:
                detail = f"inapplicable ({t.note})"
            out.append(f"  {t.label}: sigma(M)={t.sigma_m} "
                       f"b2+={t.b2_plus} b2-={t.b2_minus} "
                       f"xi.xi=-omega^2+{t.xi_constant}; {detail}")
    for n in cert.notes:
        out.append(f"note: {n}")
    return "\n".join(out) + "\n"


def certificate_to_dict(cert: ObstructionCertificate) -> dict:
    return {
        "schema": SCHEMA,
        "knot": [cert.knot.p, cert.knot.q],
        "normalized": [cert.normalized.p, cert.normalized.q],
        "mirror": cert.mirror,
        "trivial": cert.trivial,
        "exceptional": cert.exceptional,
        "sigma_method": cert.sigma_method,
        "verdict": cert.verdict,
        "eliminations": [[e.omega, e.reason] for e in cert.eliminations],
        "survivors": [[s.n, s.omega] for s in cert.survivors],
        "sigma_inputs": {str(d): v for d, v in sorted(cert.sigma_inputs.items())},
        "templates": [{
            "label": t.label, "sigma_m": t.sigma_m, "b2_plus": t.b2_plus,
            "b2_minus": t.b2_minus, "xi_constant": t.xi_constant,
            "applicable": t.applicable, "omega_squared": t.omega_squared,
            "admissible": list(t.admissible), "note": t.note,
            "sequence": t.sequence,
        } for t in cert.templates],
        "notes": list(cert.notes),
    }


def certificate_to_json(cert: ObstructionCertificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2) + "\n"
