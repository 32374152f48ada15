/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const bloch_wigner_field: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
export const family_curve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
export const maillot_measure: (a: number, b: number, c: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
