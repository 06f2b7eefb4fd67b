// Corpus-pair selection: first click picks the reference, second the
// comparison. Transitions are a pure function of the click sequence.

import { Measure } from "./types.js";

export interface SelectionState {
  ref: string | null;
  comp: string | null;
  measure: Measure;
  k: number;
  filter: boolean;
}

export function initialSelection(): SelectionState {
  return { ref: null, comp: null, measure: "proportion", k: 30, filter: true };
}

/**
 * Click rules:
 *  - no reference yet            -> clicked node becomes the reference
 *  - clicked node is the ref     -> comparison cleared, reference kept
 *  - no comparison yet           -> clicked node becomes the comparison
 *  - clicked node is the comp    -> comparison cleared
 *  - pair complete, new node     -> start over with it as the reference
 */
export function clickNode(state: SelectionState, id: string): SelectionState {
  if (state.ref === null) {
    return { ...state, ref: id, comp: null };
  }
  if (id === state.ref) {
    return { ...state, comp: null };
  }
  if (state.comp === null) {
    return { ...state, comp: id };
  }
  if (id === state.comp) {
    return { ...state, comp: null };
  }
  return { ...state, ref: id, comp: null };
}

export function pairComplete(state: SelectionState): boolean {
  return state.ref !== null && state.comp !== null && state.ref !== state.comp;
}
