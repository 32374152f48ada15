/* tslint:disable */
/* eslint-disable */

/**
 * D(z) on a width × height grid over [re_lo, re_hi] × [im_lo, im_hi],
 * row-major from the top (largest imaginary part).
 */
export function bloch_wigner_field(re_lo: number, re_hi: number, im_lo: number, im_hi: number, width: number, height: number): Float64Array;

/**
 * Closed-form m(P_a) at `steps` evenly spaced a in [lo, hi]; NaN where the
 * family or parameter is invalid.
 */
export function family_curve(kind: string, n: number, lo: number, hi: number, steps: number): Float64Array;

/**
 * m(a + bx + cy); NaN unless a, b, c > 0.
 */
export function maillot_measure(a: number, b: number, c: number): number;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly bloch_wigner_field: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly family_curve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly maillot_measure: (a: number, b: number, c: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
