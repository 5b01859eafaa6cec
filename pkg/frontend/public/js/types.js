/** JSON contract of the game service.  Every numeric value arrives as an
 * exact rational string "p/q" (or an integer string); the client never
 * converts these except for drawing coordinates. */
export {};
