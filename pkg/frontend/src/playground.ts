/**
 * State for the ensemble playground: which methods are toggled into the
 * combination, which strategy runs, and when submission is allowed.
 */

import type { AnalyzeRequest, MethodRecord, Strategy, VerdictRecord } from './api.js';

export const MAX_TEXT_LENGTH = 200;

export interface PlaygroundState {
	enabled: ReadonlySet<string>;
	available: readonly string[];
	strategy: Strategy;
	compareStrategies: boolean;
}

export function initialState(methods: MethodRecord[]): PlaygroundState {
	const ready = methods.filter((m) => m.lexicon_loaded).map((m) => m.id);
	return {
		enabled: new Set(ready),
		available: ready,
		strategy: 'weighted-vote',
		compareStrategies: false,
	};
}

export function toggleMethod(state: PlaygroundState, id: string): PlaygroundState {
	if (!state.available.includes(id)) return state;
	const enabled = new Set(state.enabled);
	if (enabled.has(id)) {
		enabled.delete(id);
	} else {
		enabled.add(id);
	}
	return { ...state, enabled };
}

export function setStrategy(state: PlaygroundState, strategy: Strategy): PlaygroundState {
	return { ...state, strategy };
}

export function setCompare(state: PlaygroundState, compare: boolean): PlaygroundState {
	return { ...state, compareStrategies: compare };
}

export interface SubmitCheck {
	ok: boolean;
	reason?: string;
}

export function canSubmit(
	state: PlaygroundState,
	text: string,
	maxLength = MAX_TEXT_LENGTH,
): SubmitCheck {
	if (state.enabled.size === 0) {
		return { ok: false, reason: 'toggle at least one method on' };
	}
	if (text.trim().length === 0) {
		return { ok: false, reason: 'type a text to analyze' };
	}
	if (text.length > maxLength) {
		return {
			ok: false,
			reason: `text is ${text.length} characters; the limit is ${maxLength}`,
		};
	}
	return { ok: true };
}

export function buildRequest(
	state: PlaygroundState,
	text: string,
	strategy?: Strategy,
): AnalyzeRequest {
	const request: AnalyzeRequest = { text, strategy: strategy ?? state.strategy };
	// Only narrow the method set when something is toggled off.
	if (state.enabled.size !== state.available.length) {
		request.methods = state.available.filter((id) => state.enabled.has(id));
	}
	return request;
}

/**
 * The running "covered" indicator: how many enabled methods produced a
 * polarity.  Enabling one more method can only grow this count.
 */
export function coveredIndicator(
	verdicts: VerdictRecord[],
	enabled: ReadonlySet<string>,
): number {
	return verdicts.filter(
		(v) =>
			enabled.has(v.method) &&
			(v.polarity === 'positive' || v.polarity === 'negative'),
	).length;
}
